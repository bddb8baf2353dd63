// Copyright 2026 The corrsim Authors
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

#ifndef CORRSIM_TESTS_MASK_TABLES_H
#define CORRSIM_TESTS_MASK_TABLES_H

#include <set>
#include <string>
#include <vector>

namespace corrsim::testing {

// Rows of the binary-tree table, written with a=10, b=01, g=00, d=11.
inline const std::vector<std::string> kTableT2 = {"a", "b", "g"};
inline const std::vector<std::string> kTableT4 = {"aa", "bb", "ab", "ba", "gg", "gd", "dg"};
inline const std::vector<std::string> kTableT8 = {"aaaa", "bbbb", "aabb", "bbaa", "abba", "baab", "abab", "baba",
                                           "gggg", "ggdd", "ddgg", "gddg", "dggd", "gdgd", "dgdg"};
inline const std::vector<std::string> kTableT16 = {
    "aaaaaaaa", "bbbbbbbb", "aaaabbbb", "bbbbaaaa", "aabbaabb", "bbaabbaa", "aabbbbaa", "bbaaaabb",
    "abababab", "ababbaba", "babaabab", "babababa", "abbaabba", "baabbaab", "abbabaab", "baababba",
    "gggggggg", "ggggdddd", "ddddgggg", "ggddggdd", "ddggddgg", "ggddddgg", "ddggggdd", "gdgdgdgd",
    "gdgddgdg", "dgdggdgd", "dgdgdgdg", "gddggddg", "dggddggd", "gddgdggd", "dggdgddg"};

inline std::set<std::string> expand(const std::vector<std::string> &rows) {
    std::set<std::string> out;
    for (const auto &r : rows) {
        std::string bits;
        for (char c : r) {
            bits += c == 'a' ? "10" : c == 'b' ? "01" : c == 'g' ? "00" : "11";
        }
        out.insert(bits);
    }
    return out;
}

}  // namespace corrsim::testing

#endif
