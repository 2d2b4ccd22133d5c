// Copyright 2026 The semiqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semiqft/circuit_io.h"

#include <initializer_list>
#include <limits>

#include "json.hpp"
#include "overloaded.h"

namespace semiqft {

using internal::overloaded;
using Json = nlohmann::ordered_json;

namespace {

Json phase_to_json(DyadicPhase phase) {
    return Json{{"num", phase.numerator()}, {"log2den", phase.log2_denominator()}};
}

Json instruction_to_json(const Instruction &instruction) {
    return std::visit(
        overloaded{
            [](const OneBitSplit &g) {
                return Json{{"kind", "split"}, {"target", g.target}, {"phase", phase_to_json(g.phase)}};
            },
            [](const ControlledPhase &g) { return Json{{"kind", "cphase"}, {"a", g.a}, {"b", g.b}, {"m", g.m}}; },
            [](const Measure &g) { return Json{{"kind", "measure"}, {"target", g.target}, {"cbit", g.cbit}}; },
            [](const ClassicallyControlledSplit &g) {
                Json terms = Json::array();
                for (const auto &t : g.phase.terms) {
                    terms.push_back(Json{{"cbit", t.cbit}, {"coeff", phase_to_json(t.coefficient)}});
                }
                return Json{{"kind", "ccsplit"},
                            {"target", g.target},
                            {"const", phase_to_json(g.phase.constant)},
                            {"terms", std::move(terms)}};
            },
        },
        instruction);
}

class Reader {
   public:
    Reader(std::size_t n_qubits, std::size_t n_cbits) : n_qubits_(n_qubits), n_cbits_(n_cbits) {
    }

    static const Json &object(const Json &value, const std::string &where, std::initializer_list<const char *> allowed) {
        if (!value.is_object()) {
            throw CircuitFormatError(where, "expected an object");
        }
        for (const auto &item : value.items()) {
            bool known = false;
            for (const char *name : allowed) {
                known = known || item.key() == name;
            }
            if (!known) {
                throw CircuitFormatError(where, "unknown field '" + item.key() + "'");
            }
        }
        return value;
    }

    static const Json &field(const Json &object, const std::string &where, const char *name) {
        auto it = object.find(name);
        if (it == object.end()) {
            throw CircuitFormatError(where, std::string("missing field '") + name + "'");
        }
        return *it;
    }

    static uint64_t integer(const Json &object, const std::string &where, const char *name, uint64_t max) {
        const Json &value = field(object, where, name);
        std::string path = where + "." + name;
        if (!value.is_number_integer()) {
            throw CircuitFormatError(path, "expected a non-negative integer");
        }
        if (value.is_number_unsigned()) {
            uint64_t v = value.get<uint64_t>();
            if (v > max) {
                throw CircuitFormatError(path, std::to_string(v) + " exceeds " + std::to_string(max));
            }
            return v;
        }
        int64_t v = value.get<int64_t>();
        if (v < 0) {
            throw CircuitFormatError(path, "expected a non-negative integer, got " + std::to_string(v));
        }
        if (static_cast<uint64_t>(v) > max) {
            throw CircuitFormatError(path, std::to_string(v) + " exceeds " + std::to_string(max));
        }
        return static_cast<uint64_t>(v);
    }

    static DyadicPhase phase(const Json &parent, const std::string &where, const char *name) {
        std::string path = where + "." + name;
        const Json &value = object(field(parent, where, name), path, {"num", "log2den"});
        auto log2den = static_cast<uint32_t>(integer(value, path, "log2den", DyadicPhase::kMaxLog2Denominator));
        uint64_t num = integer(value, path, "num", std::numeric_limits<uint64_t>::max());
        if (log2den == 0 ? num != 0 : num >= (uint64_t{1} << log2den)) {
            throw CircuitFormatError(path, "phase must lie in [0, 1)");
        }
        if (log2den > 0 && num % 2 == 0) {
            throw CircuitFormatError(path, "phase " + std::to_string(num) + "/2^" + std::to_string(log2den) +
                                               " is not in lowest terms");
        }
        return DyadicPhase::from_fraction(num, log2den);
    }

    QubitId qubit(const Json &object, const std::string &where, const char *name) const {
        uint64_t q = integer(object, where, name, std::numeric_limits<QubitId>::max());
        if (q >= n_qubits_) {
            throw CircuitFormatError(where + "." + name,
                                     "qubit " + std::to_string(q) + " out of range (n_qubits = " + std::to_string(n_qubits_) + ")");
        }
        return static_cast<QubitId>(q);
    }

    CbitId cbit(const Json &object, const std::string &where, const char *name) const {
        uint64_t c = integer(object, where, name, std::numeric_limits<CbitId>::max());
        if (c >= n_cbits_) {
            throw CircuitFormatError(where + "." + name,
                                     "cbit " + std::to_string(c) + " out of range (n_cbits = " + std::to_string(n_cbits_) + ")");
        }
        return static_cast<CbitId>(c);
    }

    Instruction instruction(const Json &value, const std::string &where) const {
        if (!value.is_object()) {
            throw CircuitFormatError(where, "expected an object");
        }
        const Json &kind_value = field(value, where, "kind");
        if (!kind_value.is_string()) {
            throw CircuitFormatError(where + ".kind", "expected a string");
        }
        const auto kind = kind_value.get<std::string>();
        if (kind == "split") {
            object(value, where, {"kind", "target", "phase"});
            return OneBitSplit{qubit(value, where, "target"), phase(value, where, "phase")};
        }
        if (kind == "cphase") {
            object(value, where, {"kind", "a", "b", "m"});
            ControlledPhase g{qubit(value, where, "a"), qubit(value, where, "b"), 0};
            g.m = static_cast<uint32_t>(integer(value, where, "m", DyadicPhase::kMaxLog2Denominator));
            if (g.m < 1) {
                throw CircuitFormatError(where + ".m", "m must be >= 1");
            }
            if (g.a == g.b) {
                throw CircuitFormatError(where, "cphase operands must be distinct qubits");
            }
            return g;
        }
        if (kind == "measure") {
            object(value, where, {"kind", "target", "cbit"});
            return Measure{qubit(value, where, "target"), cbit(value, where, "cbit")};
        }
        if (kind == "ccsplit") {
            object(value, where, {"kind", "target", "const", "terms"});
            ClassicallyControlledSplit g;
            g.target = qubit(value, where, "target");
            g.phase.constant = phase(value, where, "const");
            const Json &terms = field(value, where, "terms");
            if (!terms.is_array()) {
                throw CircuitFormatError(where + ".terms", "expected an array");
            }
            for (std::size_t i = 0; i < terms.size(); ++i) {
                std::string path = where + ".terms[" + std::to_string(i) + "]";
                object(terms[i], path, {"cbit", "coeff"});
                g.phase.terms.push_back({cbit(terms[i], path, "cbit"), phase(terms[i], path, "coeff")});
            }
            return g;
        }
        throw CircuitFormatError(where + ".kind", "unknown instruction kind '" + kind + "'");
    }

   private:
    std::size_t n_qubits_;
    std::size_t n_cbits_;
};

}  // namespace

std::string serialize(const Circuit &circuit) {
    Json instructions = Json::array();
    for (const auto &instruction : circuit.instructions) {
        instructions.push_back(instruction_to_json(instruction));
    }
    Json root{{"n_qubits", circuit.n_qubits}, {"n_cbits", circuit.n_cbits}, {"instructions", std::move(instructions)}};
    return root.dump(2) + "\n";
}

Circuit deserialize(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        throw CircuitFormatError("byte " + std::to_string(e.byte), "invalid JSON");
    }
    Reader::object(root, "$", {"n_qubits", "n_cbits", "instructions"});

    Circuit circuit;
    circuit.n_qubits = Reader::integer(root, "$", "n_qubits", 62);
    circuit.n_cbits = Reader::integer(root, "$", "n_cbits", 62);
    const Json &instructions = Reader::field(root, "$", "instructions");
    if (!instructions.is_array()) {
        throw CircuitFormatError("$.instructions", "expected an array");
    }
    Reader reader(circuit.n_qubits, circuit.n_cbits);
    for (std::size_t i = 0; i < instructions.size(); ++i) {
        circuit.instructions.push_back(reader.instruction(instructions[i], "instructions[" + std::to_string(i) + "]"));
    }
    return circuit;
}

}  // namespace semiqft
