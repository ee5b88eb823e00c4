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

#include "cli.h"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qstab/code_io.h"
#include "qstab/error.h"
#include "qstab/puncture.h"
#include "qstab/search.h"
#include "qstab/verify.h"

namespace qstab::cli {

namespace {

int status_for(ErrorKind kind) {
    return kind == ErrorKind::BudgetExceeded ? kBudgetExceeded : kInvalidInput;
}

void fail(std::ostream &err, const std::string &kind, const std::string &reason) {
    err << "error=" << kind << '\n' << "reason=" << reason << '\n';
}

std::vector<int> parse_poly(const std::string &text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) {
                throw std::invalid_argument(part);
            }
        } catch (const std::exception &) {
            throw Error(ErrorKind::InvalidInput, "modulus must be comma-separated integers c_0,...,c_r");
        }
    }
    return out;
}

FqMat read_fqm_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    }
    return read_fqm(in);
}

std::ofstream open_out(const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::InvalidInput, "cannot write " + path);
    }
    return out;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Stabilizer codes over finite fields from symmetric matrices"};
    app.require_subcommand(1);

    std::string code_path;
    std::string out_path;
    unsigned workers = 1;
    uint64_t budget = kDefaultEnumerationBudget;

    auto *build = app.add_subcommand("build", "Validate a code descriptor and write its normalized form");
    std::string spec_path;
    build->add_option("--spec", spec_path, "Input .code.json descriptor")->required();
    build->add_option("--out", out_path, "Normalized descriptor to write")->required();

    auto *report = app.add_subcommand("report", "Print the parameters (n, k) of a code");
    report->add_option("--code", code_path, "Code descriptor")->required();

    auto *distance = app.add_subcommand("distance", "Compute the exact minimum distance");
    bool pure_mode = false;
    std::optional<size_t> early_exit;
    distance->add_option("--code", code_path, "Code descriptor")->required();
    distance->add_flag("--pure", pure_mode, "Minimize over all nonzero centralizer labels");
    distance->add_option("--early-exit", early_exit, "Stop at the first weight <= D");
    distance->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    distance->add_option("--budget", budget, "Maximum number of dual elements");

    auto *verify_kl = app.add_subcommand("verify-kl", "Check the Knill-Laflamme conditions for weight <= 2t");
    size_t t = 0;
    size_t max_dim = kDefaultDenseLimit;
    verify_kl->add_option("--code", code_path, "Code descriptor")->required();
    verify_kl->add_option("--t", t, "Correctable weight t")->required();
    verify_kl->add_option("--max-dim", max_dim, "Largest state-vector length q^n");
    verify_kl->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

    auto *codewords = app.add_subcommand("codewords", "Dump the codeword basis");
    codewords->add_option("--code", code_path, "Code descriptor")->required();
    codewords->add_option("--out", out_path, "Dump file")->required();
    codewords->add_option("--max-dim", max_dim, "Largest state-vector length q^n");

    auto *search = app.add_subcommand("search-circulant", "Scan symmetric circulant first rows");
    size_t n = 0;
    int p = 2;
    int r = 1;
    std::string modulus;
    size_t min_d = 0;
    bool all_rows = false;
    search->add_option("--n", n, "Code length")->required();
    search->add_option("--p", p, "Field characteristic")->required();
    search->add_option("--r", r, "Extension degree");
    search->add_option("--modulus", modulus, "Modulus coefficients c_0,...,c_r");
    search->add_option("--min-d", min_d, "Target distance")->required();
    search->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--budget", budget, "Enumeration budget");
    search->add_flag("--all-rows", all_rows, "Visit every first row and skip non-symmetric circulants");

    auto *sample = app.add_subcommand("sample-good", "Sample a random alpha-good binary matrix");
    std::string alpha_text;
    uint64_t seed = 0;
    uint64_t max_tries = 0;
    sample->add_option("--n", n, "Matrix size")->required();
    sample->add_option("--alpha", alpha_text, "alpha as NUM/DEN")->required();
    sample->add_option("--seed", seed, "Generator seed")->required();
    sample->add_option("--max-tries", max_tries, "Maximum number of draws")->required();
    sample->add_option("--out", out_path, "Accepted matrix (.fqm); sidecar written to <out>.meta")->required();
    sample->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

    auto *block = app.add_subcommand("block-code", "Build the [[2n, 1]] code from an alpha-good R");
    std::string r_path;
    block->add_option("--R", r_path, "R in .fqm format")->required();
    block->add_option("--alpha", alpha_text, "alpha as NUM/DEN")->required();
    block->add_option("--out", out_path, "Code descriptor to write")->required();

    auto *punct = app.add_subcommand("puncture", "Puncture a pure code at one coordinate");
    size_t coord = 0;
    punct->add_option("--code", code_path, "Code descriptor")->required();
    punct->add_option("--coord", coord, "Coordinate to delete (0-based)")->required();
    punct->add_option("--out", out_path, "Punctured code descriptor")->required();
    punct->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    punct->add_option("--budget", budget, "Enumeration budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        fail(err, "InvalidArguments", e.what());
        return kInvalidInput;
    }

    try {
        if (*build) {
            auto desc = read_code_descriptor_file(spec_path);
            write_code_descriptor_file(out_path, desc.code);
            out << "n=" << desc.code.n() << '\n' << "k=" << desc.code.k() << '\n';
            return kSuccess;
        }
        if (*report) {
            auto desc = read_code_descriptor_file(code_path);
            out << "n=" << desc.code.n() << '\n' << "k=" << desc.code.k() << '\n';
            return kSuccess;
        }
        if (*distance) {
            auto desc = read_code_descriptor_file(code_path);
            DistanceOptions opts;
            opts.mode = pure_mode ? DistanceMode::Pure : DistanceMode::Standard;
            opts.early_exit = early_exit;
            opts.workers = workers;
            opts.budget = budget;
            CodeReport rep = min_distance(desc.code, opts);
            write_report(out, rep);
            if (rep.status == DistanceStatus::EarlyExit) {
                fail(err, "LowerBoundFailed",
                     "found a label of weight " + std::to_string(rep.d) + " <= " + std::to_string(*early_exit));
                return kVerificationFailed;
            }
            return kSuccess;
        }
        if (*verify_kl) {
            auto desc = read_code_descriptor_file(code_path);
            KLOptions opts;
            opts.dense_limit = max_dim;
            opts.workers = workers;
            KLReport rep = check_kl(desc.code, t, opts);
            out << "t=" << rep.t << '\n'
                << "passed=" << (rep.passed ? "true" : "false") << '\n'
                << "checked=" << rep.checked << '\n';
            if (!rep.passed) {
                const auto &f = *rep.failure;
                out << "witness_a=" << format_vec(f.pair.a) << '\n'
                    << "witness_b=" << format_vec(f.pair.b) << '\n'
                    << "i=" << f.i << '\n'
                    << "j=" << f.j << '\n'
                    << "observed=" << f.observed.real() << ',' << f.observed.imag() << '\n';
                fail(err, "KnillLaflammeFailed", "inner-product matrix is not a multiple of the identity");
                return kVerificationFailed;
            }
            return kSuccess;
        }
        if (*codewords) {
            auto desc = read_code_descriptor_file(code_path);
            auto words = all_codewords(desc.code, max_dim);
            auto file = open_out(out_path);
            for (const auto &cw : words) {
                write_codeword_dump(file, desc.code, cw);
            }
            out << "codewords=" << words.size() << '\n';
            return kSuccess;
        }
        if (*search) {
            std::optional<std::vector<int>> mod;
            if (!modulus.empty()) {
                mod = parse_poly(modulus);
            }
            Field f = Field::make(p, r, mod);
            ScanOptions opts;
            opts.workers = workers;
            opts.budget = budget;
            auto hits = circulant_scan(f, n, min_d, !all_rows, opts);
            for (const auto &h : hits) {
                out << "first_row=" << format_vec(h.first_row) << " d=" << h.report.d
                    << " pure=" << (h.report.pure ? "true" : "false") << " elapsed_ms=" << h.report.elapsed_ms
                    << '\n';
            }
            if (hits.empty()) {
                fail(err, "NoCodeFound", "no first row reaches d >= " + std::to_string(min_d));
                return kVerificationFailed;
            }
            return kSuccess;
        }
        if (*sample) {
            Rational alpha = Rational::parse(alpha_text);
            SampleResult res = sample_good(n, alpha, seed, max_tries, workers);
            out << "seed=" << seed << '\n' << "tries=" << res.tries << '\n' << "alpha=" << alpha.str() << '\n';
            if (!res.found) {
                fail(err, "SampleFailed", "no alpha-good matrix within " + std::to_string(max_tries) + " tries");
                return kVerificationFailed;
            }
            {
                auto file = open_out(out_path);
                write_fqm(file, *res.r);
            }
            auto meta = open_out(out_path + ".meta");
            meta << "seed=" << seed << '\n' << "tries=" << res.tries << '\n' << "alpha=" << alpha.str() << '\n';
            return kSuccess;
        }
        if (*block) {
            Rational alpha = Rational::parse(alpha_text);
            FqMat rmat = read_fqm_file(r_path);
            GoodnessReport good = is_alpha_good(rmat, alpha);
            if (!good.good) {
                const auto &v = *good.violation;
                std::string subset;
                for (size_t i = 0; i < v.subset.size(); i++) {
                    subset += (i ? "," : "") + std::to_string(v.subset[i]);
                }
                out << "good=false\n"
                    << "violation=" << violation_kind_name(v.kind) << '\n'
                    << "subset=" << subset << '\n'
                    << "weight=" << v.weight << '\n';
                fail(err, "NotAlphaGood", "R is not " + alpha.str() + "-good");
                return kVerificationFailed;
            }
            BlockCode bc = block_code_from_R(rmat, alpha);
            write_code_descriptor_file(out_path, bc.code);
            out << "n=" << bc.code.n() << '\n'
                << "k=" << bc.code.k() << '\n'
                << "designed_distance=" << bc.designed_distance << '\n';
            return kSuccess;
        }
        if (*punct) {
            auto desc = read_code_descriptor_file(code_path);
            DistanceOptions opts;
            opts.workers = workers;
            opts.budget = budget;
            PunctureResult res = puncture(desc.code, coord, opts);
            write_code_descriptor_file(out_path, res.code);
            out << "n=" << res.code.n() << '\n'
                << "k=" << res.code.k() << '\n'
                << "input_d=" << res.input.d << '\n'
                << "phases=" << (res.phases_available ? "true" : "false") << '\n';
            return kSuccess;
        }
    } catch (const Error &e) {
        fail(err, error_kind_name(e.kind()), e.what());
        return status_for(e.kind());
    } catch (const std::exception &e) {
        fail(err, "InvalidInput", e.what());
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace qstab::cli
