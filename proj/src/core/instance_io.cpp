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

#include "core/instance_io.hpp"

#include "json.hpp"

namespace lexsimp {

using json = nlohmann::json;

void WriteRevisionEdits(std::ostream &out, const RevisionEdits &edits,
                        Corpus corpus) {
  for (const LexicalEditInstance &inst : edits.instances) {
    nlohmann::ordered_json obj;
    obj["corpus"] = CorpusName(corpus);
    obj["article_id"] = edits.article_id;
    obj["revision_index"] = edits.revision_index;
    if (edits.comment) {
      obj["comment"] = *edits.comment;
    } else {
      obj["comment"] = nullptr;
    }
    obj["A"] = JoinTokens(inst.source);
    obj["a"] = JoinTokens(inst.target);
    out << obj.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
  }
}

InstanceReader::InstanceReader(std::unique_ptr<std::istream> input)
    : input_(std::move(input)) {}

InstanceReader InstanceReader::Open(const std::string &path) {
  return InstanceReader(std::make_unique<std::ifstream>(OpenInput(path)));
}

std::optional<LexicalEditInstance> InstanceReader::ReadLine(
    std::optional<std::string> *comment) {
  std::string line;
  while (std::getline(*input_, line)) {
    ++line_number_;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json obj = json::parse(line);
      LexicalEditInstance inst;
      inst.corpus = ParseCorpus(obj.at("corpus").get<std::string>());
      inst.article_id = obj.at("article_id").get<std::string>();
      inst.revision_index = obj.at("revision_index").get<int64_t>();
      inst.source = SplitOnSpaces(obj.at("A").get<std::string>());
      inst.target = SplitOnSpaces(obj.at("a").get<std::string>());
      comment->reset();
      if (auto it = obj.find("comment"); it != obj.end() && !it->is_null()) {
        *comment = it->get<std::string>();
      }
      if (inst.source.empty() || inst.target.empty()) {
        ThrowData("instance line " + std::to_string(line_number_) +
                  ": empty phrase");
      }
      return inst;
    } catch (const json::exception &e) {
      ThrowData("malformed instance line " + std::to_string(line_number_) +
                ": " + e.what());
    } catch (const Error &e) {
      if (e.kind() == ErrorKind::kUsage) {
        ThrowData("instance line " + std::to_string(line_number_) + ": " +
                  e.what());
      }
      throw;
    }
  }
  return std::nullopt;
}

std::optional<RevisionEdits> InstanceReader::Next() {
  while (true) {
    std::optional<std::string> comment;
    std::optional<LexicalEditInstance> inst = ReadLine(&comment);
    if (!inst) {
      std::optional<RevisionEdits> done = std::move(pending_);
      pending_.reset();
      return done;
    }
    std::optional<RevisionEdits> done;
    if (pending_ && (pending_->article_id != inst->article_id ||
                     pending_->revision_index != inst->revision_index)) {
      done = std::move(pending_);
      pending_.reset();
    }
    if (!pending_) {
      pending_ = RevisionEdits();
      pending_->article_id = inst->article_id;
      pending_->revision_index = inst->revision_index;
      pending_->comment = comment;
    }
    pending_->instances.push_back(std::move(*inst));
    if (done) return done;
  }
}

std::vector<RevisionEdits> ReadAllRevisionEdits(const std::string &path) {
  InstanceReader reader = InstanceReader::Open(path);
  std::vector<RevisionEdits> groups;
  while (auto group = reader.Next()) groups.push_back(std::move(*group));
  return groups;
}

std::vector<LexicalEditInstance> Flatten(const std::vector<RevisionEdits> &groups) {
  std::vector<LexicalEditInstance> out;
  for (const RevisionEdits &g : groups) {
    out.insert(out.end(), g.instances.begin(), g.instances.end());
  }
  return out;
}

}  // namespace lexsimp
