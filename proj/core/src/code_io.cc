// Copyright 2026 The qstab Authors
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

#include "qstab/code_io.h"

#include <fstream>
#include <ostream>

#include "json.hpp"
#include "qstab/error.h"

namespace qstab {

using nlohmann::json;

namespace {

template <typename T>
T get_field(const json &j, const char *key) {
    if (!j.contains(key)) {
        throw Error(ErrorKind::InvalidInput, std::string("descriptor is missing '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidInput, std::string("descriptor field '") + key + "': " + e.what());
    }
}

FqVec to_vec(const Field &f, const std::vector<int> &raw, size_t len, const char *what) {
    if (raw.size() != len) {
        throw Error(ErrorKind::LengthMismatch, std::string(what) + " has length " + std::to_string(raw.size()) +
                                                   ", expected " + std::to_string(len));
    }
    FqVec v;
    for (int x : raw) {
        if (x < 0 || x >= f.q()) {
            throw Error(ErrorKind::InvalidInput, std::string(what) + " entry outside [0, q)");
        }
        v.push_back(static_cast<Elem>(x));
    }
    return v;
}

FqMat to_mat(const Field &f, const json &j, const char *key, size_t n) {
    auto rows = get_field<std::vector<std::vector<int>>>(j, key);
    if (rows.size() != n) {
        throw Error(ErrorKind::LengthMismatch, std::string(key) + " must have n rows");
    }
    std::vector<FqVec> vs;
    for (const auto &r : rows) {
        vs.push_back(to_vec(f, r, n, key));
    }
    return FqMat::from_rows(f, vs, n);
}

json mat_json(const FqMat &m) {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        std::vector<int> row(m.row(r).begin(), m.row(r).end());
        rows.push_back(row);
    }
    return rows;
}

std::vector<int> vec_ints(std::span<const Elem> v) {
    return std::vector<int>(v.begin(), v.end());
}

}  // namespace

CodeDescriptor read_code_descriptor(std::istream &in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidInput, std::string("descriptor is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw Error(ErrorKind::InvalidInput, "descriptor must be a JSON object");
    }
    const json &fj = j.contains("field") ? j.at("field") : json();
    if (!fj.is_object()) {
        throw Error(ErrorKind::InvalidInput, "descriptor is missing the 'field' object");
    }
    std::optional<std::vector<int>> modulus;
    if (fj.contains("modulus") && !fj.at("modulus").is_null()) {
        modulus = get_field<std::vector<int>>(fj, "modulus");
    }
    int r = fj.contains("r") ? get_field<int>(fj, "r") : 1;
    Field f = Field::make(get_field<int>(fj, "p"), r, modulus);

    auto n_raw = get_field<long long>(j, "n");
    if (n_raw < 1 || n_raw > 64) {
        throw Error(ErrorKind::InvalidInput, "n must be between 1 and 64");
    }
    auto n = static_cast<size_t>(n_raw);
    auto construction = get_field<std::string>(j, "construction");

    std::optional<size_t> declared_k;
    if (j.contains("k")) {
        declared_k = get_field<size_t>(j, "k");
    }

    bool zero_sum = true;
    std::optional<Subspace> c;
    if (j.contains("C")) {
        const json &cj = j.at("C");
        if (cj.is_string()) {
            if (cj.get<std::string>() != "zero-sum") {
                throw Error(ErrorKind::InvalidInput, "C must be \"zero-sum\" or an explicit basis");
            }
        } else {
            zero_sum = false;
            auto rows = get_field<std::vector<std::vector<int>>>(j, "C");
            std::vector<FqVec> vs;
            for (const auto &row : rows) {
                vs.push_back(to_vec(f, row, n, "C basis vector"));
            }
            Subspace s = Subspace::span(f, n, vs);
            if (s.dim() != vs.size()) {
                throw Error(ErrorKind::DependentGenerators, "explicit C basis is linearly dependent");
            }
            c = std::move(s);
        }
    }
    if (zero_sum && construction != "generic") {
        c = zero_sum_basis(f, n);
    }

    std::optional<StabilizerCode> code;
    if (construction == "circulant") {
        auto row = to_vec(f, get_field<std::vector<int>>(j, "first_row"), n, "first_row");
        code = StabilizerCode::from_L(circulant(f, row), *c, zero_sum);
    } else if (construction == "matrixL") {
        FqMat l = to_mat(f, j, "L", n);
        FqMat d = j.contains("D") ? to_mat(f, j, "D", n) : split_upper(l);
        code = StabilizerCode::from_LD(l, d, *c, zero_sum);
    } else if (construction == "generic") {
        std::vector<SympPair> pairs;
        for (const auto &pj : get_field<json>(j, "pairs")) {
            pairs.emplace_back(to_vec(f, get_field<std::vector<int>>(pj, "a"), n, "pair a"),
                               to_vec(f, get_field<std::vector<int>>(pj, "b"), n, "pair b"));
        }
        std::optional<std::vector<PhaseExp>> phases;
        if (j.contains("phases") && !j.at("phases").is_null()) {
            std::vector<PhaseExp> ps;
            for (int e : get_field<std::vector<int>>(j, "phases")) {
                if (e < 0 || e >= f.p()) {
                    throw Error(ErrorKind::InvalidInput, "phase exponent outside [0, p)");
                }
                ps.push_back(PhaseExp{static_cast<uint8_t>(e)});
            }
            phases = std::move(ps);
        }
        code = StabilizerCode::generic(f, n, std::move(pairs), std::move(phases));
    } else {
        throw Error(ErrorKind::InvalidInput, "unknown construction '" + construction + "'");
    }
    if (declared_k && *declared_k != code->k()) {
        throw Error(ErrorKind::InvalidInput, "descriptor declares k = " + std::to_string(*declared_k) +
                                                 " but the stabilizer gives k = " + std::to_string(code->k()));
    }
    return CodeDescriptor{std::move(*code), construction, declared_k};
}

CodeDescriptor read_code_descriptor_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    }
    return read_code_descriptor(in);
}

void write_code_descriptor(std::ostream &out, const StabilizerCode &code) {
    const Field &f = code.field();
    json j;
    j["field"] = {{"p", f.p()}, {"r", f.r()}};
    if (f.r() > 1) {
        j["field"]["modulus"] = f.modulus();
    }
    j["n"] = code.n();
    j["k"] = code.k();
    if (code.has_phase_matrix()) {
        j["construction"] = "matrixL";
        j["L"] = mat_json(code.L());
        j["D"] = mat_json(code.D());
        if (code.c_is_zero_sum()) {
            j["C"] = "zero-sum";
        } else {
            json basis = json::array();
            for (const auto &v : code.C().basis()) {
                basis.push_back(vec_ints(v));
            }
            j["C"] = basis;
        }
    } else {
        j["construction"] = "generic";
        json pairs = json::array();
        for (const auto &g : code.generators()) {
            pairs.push_back({{"a", vec_ints(g.a)}, {"b", vec_ints(g.b)}});
        }
        j["pairs"] = pairs;
        if (code.has_phases()) {
            std::vector<int> ps;
            for (auto p : code.generator_phases()) {
                ps.push_back(p.e);
            }
            j["phases"] = ps;
        } else {
            j["phases"] = nullptr;
        }
    }
    out << j.dump(2) << '\n';
}

void write_code_descriptor_file(const std::string &path, const StabilizerCode &code) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::InvalidInput, "cannot write " + path);
    }
    write_code_descriptor(out, code);
}

void write_report(std::ostream &out, const CodeReport &report) {
    out << "n=" << report.n << '\n';
    out << "k=" << report.k << '\n';
    out << "d=" << report.d << '\n';
    out << "pure=" << (report.pure ? "true" : "false") << '\n';
    out << "witness_a=" << format_vec(report.witness.a) << '\n';
    out << "witness_b=" << format_vec(report.witness.b) << '\n';
    out << "elapsed_ms=" << report.elapsed_ms << '\n';
    out << "enumerated=" << report.enumerated << '\n';
    out << "status=" << distance_status_name(report.status) << '\n';
    out << "trivial_stabilizer=" << (report.trivial_stabilizer ? "true" : "false") << '\n';
}

}  // namespace qstab
