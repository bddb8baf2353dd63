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

#include "corrsim/pauli.h"

#include <stdexcept>

namespace corrsim {

char PauliOperator::letter(size_t q) const {
    static const char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[x.get(q) | (z.get(q) << 1)];
}

void PauliOperator::set_letter(size_t q, char c) {
    switch (c) {
        case 'I':
        case '_':
            x.set(q, false);
            z.set(q, false);
            break;
        case 'X':
            x.set(q, true);
            z.set(q, false);
            break;
        case 'Y':
            x.set(q, true);
            z.set(q, true);
            break;
        case 'Z':
            x.set(q, false);
            z.set(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
    }
}

bool PauliOperator::commutes(const PauliOperator &other) const {
    if (num_qubits() != other.num_qubits()) {
        throw std::invalid_argument("Pauli operators act on different qubit counts");
    }
    return x.dot(other.z) == z.dot(other.x);
}

PauliOperator PauliOperator::parse(const std::string &text) {
    size_t pos = 0;
    uint8_t phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = (phase + 1) & 3;
        pos++;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("Pauli string '" + text + "' has no letters");
    }
    PauliOperator p(text.size() - pos);
    p.phase = phase;
    for (size_t q = 0; pos + q < text.size(); q++) {
        p.set_letter(q, text[pos + q]);
    }
    return p;
}

std::string PauliOperator::str() const {
    static const char *prefix[4] = {"+", "+i", "-", "-i"};
    std::string s = prefix[phase & 3];
    for (size_t q = 0; q < num_qubits(); q++) {
        s.push_back(letter(q));
    }
    return s;
}

}  // namespace corrsim
