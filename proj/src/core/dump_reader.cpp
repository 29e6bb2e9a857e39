// Copyright 2026 The lexsimp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/dump_reader.hpp"

#include <expat.h>

#include <deque>
#include <sstream>

#include "core/markup.hpp"
#include "json.hpp"

namespace lexsimp {
namespace {

constexpr size_t kChunkSize = 1 << 16;

using json = nlohmann::json;

}  // namespace

class DumpReader::Impl {
 public:
  Impl(std::unique_ptr<std::istream> input, Corpus corpus, DumpFormat format,
       bool strip)
      : input_(std::move(input)), corpus_(corpus), strip_(strip) {
    format_ = format == DumpFormat::kAuto ? Detect() : format;
    if (format_ == DumpFormat::kMediaWikiXml) {
      parser_ = XML_ParserCreate(nullptr);
      XML_SetUserData(parser_, this);
      XML_SetElementHandler(parser_, &Impl::OnStart, &Impl::OnEnd);
      XML_SetCharacterDataHandler(parser_, &Impl::OnText);
    }
  }

  ~Impl() {
    if (parser_ != nullptr) XML_ParserFree(parser_);
  }

  std::optional<VersionSequence> Next() {
    if (format_ == DumpFormat::kMediaWikiXml) return NextXml();
    return NextJsonl();
  }

  const DumpStats &stats() const { return stats_; }
  DumpFormat format() const { return format_; }

 private:
  DumpFormat Detect() {
    // Skip whitespace and a UTF-8 byte order mark without consuming content.
    while (true) {
      int c = input_->peek();
      if (c == EOF) return DumpFormat::kJsonl;
      if (c == '<') return DumpFormat::kMediaWikiXml;
      if (c == '{') return DumpFormat::kJsonl;
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == 0xEF ||
          c == 0xBB || c == 0xBF) {
        input_->get();
        ++skipped_prefix_;
        continue;
      }
      ThrowData("unrecognized dump format at byte offset " +
                std::to_string(skipped_prefix_));
    }
  }

  // ---- MediaWiki XML ----

  std::optional<VersionSequence> NextXml() {
    std::vector<char> buffer(kChunkSize);
    while (ready_.empty() && !finished_) {
      input_->read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      std::streamsize got = input_->gcount();
      bool last = got < static_cast<std::streamsize>(buffer.size());
      if (last) finished_ = true;
      if (XML_Parse(parser_, buffer.data(), static_cast<int>(got),
                    last ? 1 : 0) == XML_STATUS_ERROR) {
        uint64_t offset =
            static_cast<uint64_t>(XML_GetCurrentByteIndex(parser_)) +
            skipped_prefix_;
        ThrowData("malformed XML at byte offset " + std::to_string(offset) +
                  ": " + XML_ErrorString(XML_GetErrorCode(parser_)));
      }
    }
    if (ready_.empty()) return std::nullopt;
    VersionSequence seq = std::move(ready_.front());
    ready_.pop_front();
    ++stats_.pages_emitted;
    return seq;
  }

  static void OnStart(void *data, const XML_Char *name, const XML_Char **) {
    static_cast<Impl *>(data)->StartElement(name);
  }

  static void OnEnd(void *data, const XML_Char *name) {
    static_cast<Impl *>(data)->EndElement(name);
  }

  static void OnText(void *data, const XML_Char *text, int len) {
    Impl *self = static_cast<Impl *>(data);
    if (self->capturing_) self->text_.append(text, static_cast<size_t>(len));
  }

  // Parent element name, or empty at the root.
  std::string_view Parent() const {
    return path_.size() >= 2 ? std::string_view(path_[path_.size() - 2])
                             : std::string_view();
  }

  void StartElement(std::string_view name) {
    path_.emplace_back(name);
    std::string_view parent = Parent();
    if (name == "page") {
      page_ = VersionSequence();
      page_.corpus = corpus_;
      page_id_.clear();
      in_page_ = true;
    } else if (name == "revision" && in_page_) {
      revision_ = Revision();
      in_revision_ = true;
    }
    capturing_ = false;
    if (in_page_ && parent == "page" && (name == "title" || name == "id")) {
      capturing_ = true;
    } else if (in_revision_ && parent == "revision" &&
               (name == "comment" || name == "text" || name == "timestamp")) {
      capturing_ = true;
    }
    if (capturing_) text_.clear();
  }

  void EndElement(std::string_view name) {
    std::string_view parent = Parent();
    if (capturing_) {
      if (parent == "page" && name == "title") {
        page_.title = text_;
      } else if (parent == "page" && name == "id") {
        page_id_ = text_;
      } else if (parent == "revision" && name == "comment") {
        revision_.comment = text_;
      } else if (parent == "revision" && name == "text") {
        revision_.text = strip_ ? StripMarkup(text_) : text_;
      } else if (parent == "revision" && name == "timestamp") {
        revision_.timestamp = text_;
      }
      capturing_ = false;
    }
    if (name == "revision" && in_revision_) {
      int64_t index = static_cast<int64_t>(page_.revisions.size());
      revision_.revision_index = index;
      revision_.source_index = index;
      page_.revisions.push_back(std::move(revision_));
      ++stats_.revisions;
      in_revision_ = false;
    } else if (name == "page" && in_page_) {
      FinishPage();
      in_page_ = false;
    }
    path_.pop_back();
  }

  void FinishPage() {
    ++stats_.pages_seen;
    if (page_.revisions.empty()) {
      ++stats_.pages_skipped;
      return;
    }
    page_.article_id = page_id_.empty() ? page_.title : page_id_;
    for (Revision &rev : page_.revisions) rev.article_id = page_.article_id;
    ready_.push_back(std::move(page_));
  }

  // ---- JSONL fixtures ----

  std::optional<VersionSequence> NextJsonl() {
    std::string line;
    while (!finished_) {
      uint64_t line_offset = offset_;
      if (!std::getline(*input_, line)) {
        finished_ = true;
        break;
      }
      offset_ += line.size() + 1;
      ++line_number_;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

      json obj;
      try {
        obj = json::parse(line);
      } catch (const json::exception &e) {
        ThrowData(Where(line_offset) + ": " + e.what());
      }
      if (!obj.is_object()) ThrowData(Where(line_offset) + ": expected object");

      Revision rev;
      std::string title;
      try {
        rev.article_id = IdString(obj.at("article_id"));
        if (rev.article_id.empty()) {
          ThrowData(Where(line_offset) +
                    ": article_id must be a non-empty string or integer");
        }
        if (auto it = obj.find("title"); it != obj.end() && it->is_string()) {
          title = it->get<std::string>();
        }
        if (auto it = obj.find("comment"); it != obj.end() && !it->is_null()) {
          rev.comment = it->get<std::string>();
        }
        if (auto it = obj.find("timestamp"); it != obj.end() && !it->is_null()) {
          rev.timestamp = it->get<std::string>();
        }
        std::string text = obj.at("text").get<std::string>();
        rev.text = strip_ ? StripMarkup(text) : std::move(text);
        if (auto it = obj.find("source_index"); it != obj.end()) {
          rev.source_index = it->get<int64_t>();
        } else if (auto idx = obj.find("index"); idx != obj.end()) {
          rev.source_index = idx->get<int64_t>();
        } else {
          rev.source_index = -1;
        }
      } catch (const json::exception &e) {
        ThrowData(Where(line_offset) + ": " + e.what());
      }
      ++stats_.revisions;

      std::optional<VersionSequence> done;
      if (pending_ && pending_->article_id != rev.article_id) {
        done = TakePending();
      }
      if (!pending_) {
        pending_ = VersionSequence();
        pending_->article_id = rev.article_id;
        pending_->title = title;
        pending_->corpus = corpus_;
      }
      int64_t position = static_cast<int64_t>(pending_->revisions.size());
      rev.revision_index = position;
      if (rev.source_index < 0) rev.source_index = position;
      pending_->revisions.push_back(std::move(rev));
      if (done) return done;
    }
    if (pending_) return TakePending();
    return std::nullopt;
  }

  VersionSequence TakePending() {
    VersionSequence seq = std::move(*pending_);
    pending_.reset();
    ++stats_.pages_seen;
    ++stats_.pages_emitted;
    return seq;
  }

  std::string Where(uint64_t line_offset) const {
    return "malformed JSONL at line " + std::to_string(line_number_) +
           " (byte offset " + std::to_string(line_offset + skipped_prefix_) + ")";
  }

  static std::string IdString(const json &value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_integer()) return std::to_string(value.get<int64_t>());
    return {};
  }

  std::unique_ptr<std::istream> input_;
  Corpus corpus_;
  bool strip_;
  DumpFormat format_ = DumpFormat::kJsonl;
  DumpStats stats_;
  bool finished_ = false;
  uint64_t skipped_prefix_ = 0;

  // XML state.
  XML_Parser parser_ = nullptr;
  std::vector<std::string> path_;
  std::deque<VersionSequence> ready_;
  VersionSequence page_;
  Revision revision_;
  std::string page_id_;
  std::string text_;
  bool in_page_ = false;
  bool in_revision_ = false;
  bool capturing_ = false;

  // JSONL state.
  std::optional<VersionSequence> pending_;
  uint64_t offset_ = 0;
  uint64_t line_number_ = 0;
};

DumpReader::DumpReader(std::unique_ptr<std::istream> input, Corpus corpus,
                       DumpFormat format, bool strip_markup)
    : impl_(std::make_unique<Impl>(std::move(input), corpus, format,
                                   strip_markup)) {}

DumpReader::DumpReader(DumpReader &&other) noexcept = default;
DumpReader &DumpReader::operator=(DumpReader &&other) noexcept = default;
DumpReader::~DumpReader() = default;

DumpReader DumpReader::Open(const std::string &path, Corpus corpus,
                            DumpFormat format, bool strip_markup) {
  auto in = std::make_unique<std::ifstream>(OpenInput(path));
  return DumpReader(std::move(in), corpus, format, strip_markup);
}

std::optional<VersionSequence> DumpReader::Next() { return impl_->Next(); }

const DumpStats &DumpReader::stats() const { return impl_->stats(); }

DumpFormat DumpReader::format() const { return impl_->format(); }

std::vector<VersionSequence> ParseDump(const std::string &data, Corpus corpus,
                                       DumpFormat format, DumpStats *stats) {
  DumpReader reader(std::make_unique<std::istringstream>(data), corpus, format);
  std::vector<VersionSequence> out;
  while (auto seq = reader.Next()) out.push_back(std::move(*seq));
  if (stats != nullptr) *stats = reader.stats();
  return out;
}

VersionSequence FilterTextualChanges(VersionSequence sequence) {
  std::vector<Revision> kept;
  kept.reserve(sequence.revisions.size());
  for (Revision &rev : sequence.revisions) {
    if (!kept.empty() && kept.back().text == rev.text) continue;
    rev.revision_index = static_cast<int64_t>(kept.size());
    kept.push_back(std::move(rev));
  }
  sequence.revisions = std::move(kept);
  return sequence;
}

void WriteSequenceJsonl(std::ostream &out, const VersionSequence &sequence) {
  for (const Revision &rev : sequence.revisions) {
    nlohmann::ordered_json obj;
    obj["article_id"] = sequence.article_id;
    obj["title"] = sequence.title;
    obj["index"] = rev.revision_index;
    obj["source_index"] = rev.source_index;
    if (rev.comment) {
      obj["comment"] = *rev.comment;
    } else {
      obj["comment"] = nullptr;
    }
    obj["text"] = rev.text;
    if (rev.timestamp) obj["timestamp"] = *rev.timestamp;
    out << obj.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
  }
}

}  // namespace lexsimp
