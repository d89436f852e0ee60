#include "preproj/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Target {
    std::string type;
    int n = 0;
    int m = 0;
};

void add_target_options(CLI::App* cmd, Target& t) {
    cmd->add_option("--type", t.type, "Quiver type: t (T_n) or a (A_m)")->required()->check(CLI::IsMember({"t", "a", "T", "A"}));
    cmd->add_option("--n", t.n, "Size of T_n")->check(CLI::PositiveNumber);
    cmd->add_option("--m", t.m, "Size of A_m")->check(CLI::Range(2, 1000));
}

std::pair<preproj::QuiverKind, int> resolve(const Target& t) {
    bool is_t = t.type == "t" || t.type == "T";
    if (is_t) {
        if (t.n < 1 || t.m != 0) throw UsageError("--type t needs --n and no --m");
        return {preproj::QuiverKind::TypeT, t.n};
    }
    if (t.m < 2 || t.n != 0) throw UsageError("--type a needs --m (at least 2) and no --n");
    return {preproj::QuiverKind::TypeA, t.m};
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

std::string hilbert_text(preproj::QuiverKind kind, int size, const std::string& format) {
    preproj::Workspace ws(kind, size, 1);
    const auto& alg = ws.algebra();
    int n = alg.num_vertices();
    auto matrix = preproj::polynomial_matrix_json(alg.hilbert());
    auto formula = preproj::polynomial_matrix_json(
        preproj::hilbert_formula(preproj::adjacency(ws.quiver()), alg.coxeter_number(), alg.top_degree()));
    if (format == "tsv") {
        std::ostringstream os;
        os << "row\tcol\thilbert\n";
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) os << i + 1 << '\t' << j + 1 << '\t' << matrix[i][j].get<std::string>() << '\n';
        return os.str();
    }
    nlohmann::json j{{"schema", "preproj-hilbert/1"},
                     {"quiver", {{"type", kind == preproj::QuiverKind::TypeT ? "T" : "A"}, {"size", size}}},
                     {"coxeter_number", alg.coxeter_number()},
                     {"hilbert", matrix},
                     {"formula", formula},
                     {"matches_formula", matrix == formula}};
    return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild cohomology and calculus of preprojective algebras of type T and A"};
    app.require_subcommand(1);

    Target vt;
    std::vector<std::string> suites{"all"};
    int periods = 2;
    std::string format = "json";
    std::string output;
    auto* verify = app.add_subcommand("verify", "Run verification suites and report PASS/FAIL per check");
    add_target_options(verify, vt);
    verify->add_option("--suite", suites, "hilbert, resolution, hh, cup, calculus, appendix or all")
        ->delimiter(',')
        ->check(CLI::IsMember({"hilbert", "resolution", "hh", "cup", "calculus", "appendix", "all"}));
    verify->add_option("--periods", periods, "Number of cohomology periods (HH^0..HH^{6p})")->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    verify->add_option("-o,--output", output, "Output path (stdout when omitted)");

    Target ht;
    std::string hformat = "json";
    std::string houtput;
    auto* hilbert = app.add_subcommand("hilbert", "Print the graded dimension matrix H_A(t)");
    add_target_options(hilbert, ht);
    hilbert->add_option("--format", hformat, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    hilbert->add_option("-o,--output", houtput, "Output path (stdout when omitted)");

    Target at;
    std::string aoutput;
    auto* algebra = app.add_subcommand("algebra", "Dump the algebra: basis, Hilbert matrix, structure constants");
    add_target_options(algebra, at);
    algebra->add_option("-o,--output", aoutput, "Output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*hilbert) {
            auto [kind, size] = resolve(ht);
            emit(hilbert_text(kind, size, hformat), houtput);
            return kExitPass;
        }
        if (*algebra) {
            auto [kind, size] = resolve(at);
            preproj::Workspace ws(kind, size, 1);
            emit(preproj::to_json(ws.algebra()).dump(2) + "\n", aoutput);
            return kExitPass;
        }
        auto [kind, size] = resolve(vt);
        std::vector<preproj::Suite> selected;
        for (const auto& s : suites) {
            if (s == "all") {
                for (auto x : preproj::default_suites(kind))
                    if (std::find(selected.begin(), selected.end(), x) == selected.end()) selected.push_back(x);
                continue;
            }
            auto x = *preproj::parse_suite(s);
            if (!preproj::suite_applies(x, kind)) throw UsageError("suite " + s + " needs --type t");
            if (std::find(selected.begin(), selected.end(), x) == selected.end()) selected.push_back(x);
        }
        preproj::Workspace ws(kind, size, periods);
        preproj::RunReport report;
        report.kind = kind;
        report.size = size;
        report.periods = periods;
        for (auto s : selected) report.suites.push_back(preproj::run_suite(ws, s));
        emit(format == "tsv" ? report.to_tsv() : report.to_json().dump(2) + "\n", output);
        return report.pass() ? kExitPass : kExitVerificationFailed;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
