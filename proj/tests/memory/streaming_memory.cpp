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

// Reads a 10k-page MediaWiki export and checks that peak memory grows by far
// less than the file size.
#include <sys/resource.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "core/dump_reader.hpp"
#include "support/oracles.hpp"

namespace {

long PeakRssKb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

void WriteDump(const std::string &path, int pages, int revisions) {
  std::ofstream out(path);
  out << "<mediawiki xmlns=\"http://www.mediawiki.org/xml/export-0.10/\" version=\"0.10\">\n"
      << "  <siteinfo><sitename>Memory</sitename></siteinfo>\n";
  std::string paragraph;
  for (int i = 0; i < 24; ++i) {
    paragraph += "The [[river]] near the '''town''' is crossed by bridge number " +
                 std::to_string(i) + ".{{cn}} ";
  }
  for (int p = 0; p < pages; ++p) {
    out << "  <page>\n    <title>Page " << p << "</title>\n    <ns>0</ns>\n    <id>" << p + 1
        << "</id>\n";
    for (int r = 0; r < revisions; ++r) {
      out << "    <revision>\n      <id>" << p * revisions + r + 1 << "</id>\n"
          << "      <comment>edit " << r << "</comment>\n"
          << "      <text xml:space=\"preserve\">" << paragraph << "Revision " << r
          << " of page " << p << ".</text>\n    </revision>\n";
    }
    out << "  </page>\n";
  }
  out << "</mediawiki>\n";
}

}  // namespace

int main() {
  lexsimp::testing::TempDir dir("memory");
  std::string path = dir.File("dump.xml");
  constexpr int kPages = 10000;
  WriteDump(path, kPages, 3);
  auto file_kb = static_cast<long>(std::filesystem::file_size(path) / 1024);

  long before = PeakRssKb();
  lexsimp::DumpReader reader = lexsimp::DumpReader::Open(path, lexsimp::Corpus::kSimple);
  uint64_t revisions = 0;
  while (auto page = reader.Next()) revisions += page->revisions.size();
  long growth = PeakRssKb() - before;

  bool ok = reader.stats().pages_emitted == kPages && revisions == 3 * kPages &&
            growth < file_kb / 4;
  std::printf("%s: %d pages, %llu revisions, %ld KiB file, peak RSS grew %ld KiB\n",
              ok ? "ok" : "FAILED", kPages, static_cast<unsigned long long>(revisions), file_kb,
              growth);
  return ok ? 0 : 1;
}
