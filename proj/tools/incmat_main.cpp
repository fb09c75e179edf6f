#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "incmat/chains.hpp"
#include "incmat/inclusion.hpp"
#include "incmat/snf.hpp"
#include "incmat/solver.hpp"
#include "incmat/subset.hpp"
#include "incmat/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

using incmat::ExactMatrix;
using incmat::Int;
using incmat::IntVec;
using incmat::SubsetWord;

// Chains print in the compact style "2 -> 23 -> 234" when every element is a
// single digit; otherwise members keep the comma form.
std::string chain_member_text(const SubsetWord& s) {
    if (s.empty()) return "∅";
    if (s.max_element() <= 9) {
        std::string out;
        for (int e : s.elements()) out += static_cast<char>('0' + e);
        return out;
    }
    return s.str();
}

std::string chain_text(const incmat::Chain& c) {
    std::string out;
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        if (i > 0) out += " → ";
        out += chain_member_text(c.members[i]);
    }
    return out;
}

nlohmann::json chain_json(const incmat::Chain& c) {
    nlohmann::json j;
    j["rank"] = c.rank;
    j["members"] = nlohmann::json::array();
    for (const SubsetWord& m : c.members) j["members"].push_back(m.str());
    return j;
}

nlohmann::json matrix_json(const ExactMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
        j["entries"].push_back(std::move(row));
    }
    if (m.row_labels) {
        j["row_labels"] = nlohmann::json::array();
        for (const SubsetWord& s : *m.row_labels) j["row_labels"].push_back(s.str());
    }
    if (m.col_labels) {
        j["col_labels"] = nlohmann::json::array();
        for (const SubsetWord& s : *m.col_labels) j["col_labels"].push_back(s.str());
    }
    return j;
}

ExactMatrix build_by_kind(const std::string& kind, int t, int k, int v, int j, bool has_j) {
    if (kind == "q") {
        if (!has_j) throw std::invalid_argument("matrix kind q needs --j");
        return incmat::build_q(t, j, v, k);
    }
    if (has_j) throw std::invalid_argument("--j only applies to matrix kind q");
    if (kind == "w") return incmat::build_w(t, k, v);
    if (kind == "r") return incmat::build_r(t, k, v);
    if (kind == "wbar") return incmat::build_w_bar(t, k, v);
    if (kind == "dbar") return incmat::build_d_bar(t, k, v);
    if (kind == "wunder") return incmat::build_w_under(t, k, v);
    if (kind == "dunder") return incmat::build_d_under(t, k, v);
    if (kind == "a") return incmat::select_a(t, k, v);
    throw std::invalid_argument("unknown matrix kind '" + kind + "'");
}

std::string join_ints(const IntVec& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i > 0) out += ',';
        out += d[i].str();
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tableau ranks, symmetric chain decompositions, inclusion matrices,"
                 " Smith normal forms, and integral inclusion-system solving"};
    app.require_subcommand(1);

    std::string set_text, kind, input_path, b_path, u_out, v_out;
    std::string chain_format = "text", deco_format = "json", matrix_format = "text";
    std::string snf_format = "text", solve_format = "text";
    int t = 0, k = 0, v = 0, j = 0, v_max = 0;
    long long lambda = 0;

    CLI::App* cmd_rank = app.add_subcommand("rank", "Rank of a set (blank count complement)");
    cmd_rank->add_option("set", set_text, "comma separated elements, empty for the empty set")
        ->required();

    CLI::App* cmd_tableau = app.add_subcommand("tableau", "Two-row tableau of a set");
    cmd_tableau->add_option("set", set_text)->required();

    CLI::App* cmd_chain = app.add_subcommand("chain", "Decomposition chain through a set");
    cmd_chain->add_option("set", set_text)->required();
    cmd_chain->add_option("--v", v, "universe size")->required();
    cmd_chain->add_option("--format", chain_format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* cmd_decompose = app.add_subcommand("decompose", "Symmetric chain decomposition");
    cmd_decompose->add_option("--v", v, "universe size")->required();
    std::string deco_kind = "rank";
    cmd_decompose->add_option("--kind", deco_kind)->check(CLI::IsMember({"rank", "complement"}));
    cmd_decompose->add_option("--format", deco_format)->check(CLI::IsMember({"json", "text"}));

    CLI::App* cmd_matrix = app.add_subcommand("matrix", "Inclusion matrices and companions");
    cmd_matrix->add_option("kind", kind, "w|r|wbar|dbar|wunder|q|dunder|a")->required();
    cmd_matrix->add_option("--t", t, "row family parameter")->required();
    cmd_matrix->add_option("--k", k, "column family parameter")->required();
    cmd_matrix->add_option("--v", v, "universe size")->required();
    CLI::Option* j_opt = cmd_matrix->add_option("--j", j, "column block size (kind q)");
    cmd_matrix->add_option("--format", matrix_format)->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* cmd_snf = app.add_subcommand("snf", "Smith normal form");
    cmd_snf->add_option("kind", kind, "matrix kind, omit when using --input");
    cmd_snf->add_option("--t", t);
    cmd_snf->add_option("--k", k);
    cmd_snf->add_option("--v", v);
    CLI::Option* snf_j_opt = cmd_snf->add_option("--j", j);
    cmd_snf->add_option("--input", input_path, "read the matrix from a file instead");
    cmd_snf->add_option("--u-out", u_out, "write the row transform");
    cmd_snf->add_option("--v-out", v_out, "write the column transform");
    cmd_snf->add_option("--format", snf_format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* cmd_solve = app.add_subcommand("solve", "Integral solution of the t-vs-k system");
    cmd_solve->add_option("--t", t)->required();
    cmd_solve->add_option("--k", k)->required();
    cmd_solve->add_option("--v", v)->required();
    CLI::Option* lambda_opt = cmd_solve->add_option("--lambda", lambda, "constant right-hand side");
    CLI::Option* b_opt = cmd_solve->add_option("--b", b_path, "right-hand side vector file");
    lambda_opt->excludes(b_opt);
    cmd_solve->add_option("--format", solve_format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* cmd_verify = app.add_subcommand("verify", "Run the structural identity suite");
    cmd_verify->add_option("--v-max", v_max, "largest universe size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (app.got_subcommand(cmd_rank)) {
            std::cout << incmat::rank(SubsetWord::parse(set_text)) << '\n';
            return kOk;
        }

        if (app.got_subcommand(cmd_tableau)) {
            std::cout << incmat::tableau(SubsetWord::parse(set_text)).str() << '\n';
            return kOk;
        }

        if (app.got_subcommand(cmd_chain)) {
            incmat::Chain c = incmat::chain_of(SubsetWord::parse(set_text), v);
            if (chain_format == "json") {
                nlohmann::json out = chain_json(c);
                out["v"] = v;
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << chain_text(c) << '\n';
            }
            return kOk;
        }

        if (app.got_subcommand(cmd_decompose)) {
            incmat::Decomposition d = deco_kind == "rank" ? incmat::decompose(v)
                                                          : incmat::complement_decompose(v);
            if (deco_format == "text") {
                for (const incmat::Chain& c : d.chains) std::cout << chain_text(c) << '\n';
            } else {
                std::cout << incmat::decomposition_to_json(d) << '\n';
            }
            return kOk;
        }

        if (app.got_subcommand(cmd_matrix)) {
            ExactMatrix m = build_by_kind(kind, t, k, v, j, !j_opt->empty());
            if (matrix_format == "json")
                std::cout << matrix_json(m).dump(2) << '\n';
            else if (matrix_format == "csv")
                std::cout << m.to_csv();
            else
                std::cout << m.to_text();
            return kOk;
        }

        if (app.got_subcommand(cmd_snf)) {
            ExactMatrix m;
            if (!input_path.empty()) {
                if (!kind.empty())
                    throw std::invalid_argument("give either a matrix kind or --input, not both");
                std::ifstream in(input_path);
                if (!in) throw std::invalid_argument("cannot open '" + input_path + "'");
                m = ExactMatrix::from_text(in);
            } else {
                if (kind.empty()) throw std::invalid_argument("matrix kind or --input required");
                m = build_by_kind(kind, t, k, v, j, !snf_j_opt->empty());
            }
            incmat::SnfDecomposition snf = incmat::smith_normal_form(m);
            if (!u_out.empty()) std::ofstream(u_out) << snf.u.to_text();
            if (!v_out.empty()) std::ofstream(v_out) << snf.v.to_text();
            if (snf_format == "json") {
                nlohmann::json out;
                out["d"] = nlohmann::json::array();
                for (const Int& x : snf.d) out["d"].push_back(x.str());
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << "d = " << join_ints(snf.d) << '\n';
            }
            return kOk;
        }

        if (app.got_subcommand(cmd_solve)) {
            IntVec b;
            if (!b_opt->empty()) {
                std::ifstream in(b_path);
                if (!in) throw std::invalid_argument("cannot open '" + b_path + "'");
                b = incmat::vector_from_text(in);
            } else if (!lambda_opt->empty()) {
                b.assign(incmat::binomial(v, t), Int(lambda));
            } else {
                throw std::invalid_argument("solve needs --lambda or --b");
            }
            incmat::SolveReport rep = incmat::solve_integral(t, k, v, b);
            if (solve_format == "json") {
                nlohmann::json out;
                out["feasible"] = rep.feasible;
                if (rep.feasible) {
                    out["witness"] = nlohmann::json::array();
                    for (const Int& x : *rep.witness) out["witness"].push_back(x.str());
                } else {
                    out["violated_levels"] = *rep.violated_levels;
                }
                std::cout << out.dump(2) << '\n';
            } else if (rep.feasible) {
                std::vector<SubsetWord> labels = incmat::subsets_of_size(v, k);
                std::cout << incmat::vector_to_text(*rep.witness, labels);
            } else {
                const ExactMatrix& wbar = incmat::cached_w_bar(t, t, v);
                IntVec compressed = wbar.apply(b);
                const auto& labels = *wbar.row_labels;
                int last = -1;
                for (std::size_t r = 0; r < compressed.size(); ++r) {
                    int level = labels[r].size();
                    Int divisor = incmat::binomial(k - level, t - level);
                    if (level != last && compressed[r] % divisor != 0) {
                        std::cout << "violated at i=" << level << ": " << divisor << " ∤ "
                                  << compressed[r] << '\n';
                        last = level;
                    }
                }
            }
            return rep.feasible ? kOk : kViolation;
        }

        if (app.got_subcommand(cmd_verify)) {
            bool all_ok = true;
            for (const incmat::CheckResult& r : incmat::run_verification(v_max)) {
                if (r.passed)
                    std::cout << "PASS " << r.name << '\n';
                else
                    std::cout << "FAIL " << r.name << ": " << r.detail << '\n';
                all_ok = all_ok && r.passed;
            }
            return all_ok ? kOk : kViolation;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
