// Command-line harness: verify <check>, enumerate, table, series, gamma/psi.
// Exit code 0 iff all selected checks pass.
#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cparking/checks.hpp"
#include "cparking/json_io.hpp"
#include "cparking/macdonald.hpp"

using namespace cparking;

namespace {

struct BudgetConfig {
    json data;

    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("IOError: cannot read config " + path);
        in >> data;
    }

    void apply(CheckParams& p) const {
        if (data.is_null()) return;
        auto fill = [&](const json& j) {
            if (p.area_budget < 0 && j.contains("area_budget"))
                p.area_budget = j["area_budget"].get<int>();
            if (p.labels < 0 && j.contains("labels")) p.labels = j["labels"].get<int>();
            if (j.contains("guard")) p.guard = j["guard"].get<int>();
        };
        if (data.contains("per"))
            for (const auto& e : data["per"])
                if (e.value("m", 0) == p.m && e.value("n", 0) == p.n && e.value("k", 0) == p.k)
                    fill(e);
        if (data.contains("defaults")) fill(data["defaults"]);
    }
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("IOError: cannot write " + path);
    out << text;
}

std::string omega_csv(const OmegaSeries& s) {
    std::ostringstream os;
    os << "t,x_partition,coeff\n";
    for (const auto& [x, c] : s.terms) {
        bool sorted = true;
        for (size_t i = 0; i + 1 < x.size(); ++i)
            if (x[i] < x[i + 1]) sorted = false;
        if (!sorted) continue;
        std::vector<int> key(x);
        while (!key.empty() && key.back() == 0) key.pop_back();
        std::map<int, QTCoeff> slices;
        for (const auto& [k, v] : c.terms())
            slices[k.second] += QTCoeff::monomial(k.first, 0, v);
        for (const auto& [td, qc] : slices) {
            os << td << ",\"";
            for (size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << key[i];
            os << "\",\"" << qc.str() << "\"\n";
        }
    }
    return os.str();
}

json report_json(const CheckReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return {{"check", r.name},     {"params", params},     {"verdict", r.verdict},
            {"witness", r.witness}, {"warnings", r.warnings}, {"millis", r.millis}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification harness for cyclic (m,n)-parking function combinatorics"};
    app.require_subcommand(1);

    // shared options
    int m = 0, n = 0, k = 0, area_budget = -1, labels = -1, guard = 1;
    std::string alpha_str, lambda_str, json_out, csv_out, config_path, input_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "first coprime parameter");
        cmd->add_option("--n", n, "second coprime parameter");
        cmd->add_option("--k", k, "tuple order");
        cmd->add_option("--alpha", alpha_str, "composition, comma separated");
        cmd->add_option("--lambda", lambda_str, "partition, comma separated");
        cmd->add_option("--area-budget", area_budget, "total area cap");
        cmd->add_option("--labels", labels, "label cap");
        cmd->add_option("--guard", guard, "guard band for truncated comparisons");
        cmd->add_option("--json", json_out, "write a JSON report/object to this path");
        cmd->add_option("--config", config_path, "budget config file");
    };

    auto* verify = app.add_subcommand("verify", "run one or more named checks");
    std::string check_list;
    verify->add_option("check", check_list, "check name, comma list, or 'all'")->required();
    add_common(verify);

    auto* enumerate = app.add_subcommand("enumerate", "enumerate combinatorial objects");
    std::string enum_what, chain_kind = "all";
    int chain_len = 1;
    enumerate->add_option("what", enum_what, "cpf | pf | ptab | chains")->required();
    enumerate->add_option("--kind", chain_kind, "chain kind: all | hat | bar");
    enumerate->add_option("--len", chain_len, "chain length");
    add_common(enumerate);

    auto* table = app.add_subcommand("table", "emit tables");
    std::string table_what;
    int degree = 2, nvars = 0;
    table->add_option("what", table_what, "macdonald | phi | calpha")->required();
    table->add_option("--degree", degree, "macdonald table degree");
    table->add_option("--nvars", nvars, "variable count");
    table->add_option("--csv", csv_out, "write CSV to this path");
    add_common(table);

    auto* series = app.add_subcommand("series", "emit rhs_main / rhs_wilson as CSV");
    std::string series_what = "main";
    series->add_option("what", series_what, "main | wilson");
    series->add_option("--csv", csv_out, "write CSV to this path");
    add_common(series);

    auto* gamma_cmd = app.add_subcommand("gamma", "apply Gamma to a tuple JSON");
    gamma_cmd->add_option("--input", input_path, "tuple JSON file")->required();
    gamma_cmd->add_option("--json", json_out, "output path (default stdout)");

    auto* psi_cmd = app.add_subcommand("psi", "apply Psi to a parking-function JSON");
    psi_cmd->add_option("--input", input_path, "parking function JSON file")->required();
    psi_cmd->add_option("--json", json_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        CheckParams params;
        params.m = m;
        params.n = n;
        params.k = k;
        if (!alpha_str.empty()) params.alpha = parse_int_list(alpha_str);
        if (!lambda_str.empty()) params.lambda = parse_int_list(lambda_str);
        params.area_budget = area_budget;
        params.labels = labels;
        params.guard = guard;
        BudgetConfig config;
        if (!config_path.empty()) {
            config.load(config_path);
            config.apply(params);
        }

        if (verify->parsed()) {
            std::vector<std::string> selected;
            if (check_list == "all")
                selected = check_names();
            else {
                std::stringstream ss(check_list);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) selected.push_back(item);
            }
            // checks are independent; run them on a small pool, print in order
            size_t nthreads = std::thread::hardware_concurrency();
            if (const char* env = std::getenv("VERIFY_THREADS"))
                nthreads = std::max(1, std::atoi(env));
            nthreads = std::min(nthreads, selected.size());
            std::vector<CheckReport> reports(selected.size());
            std::atomic<size_t> next{0};
            auto worker = [&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= selected.size()) return;
                    reports[i] = run_check(selected[i], params);
                }
            };
            std::vector<std::thread> threads;
            for (size_t i = 1; i < nthreads; ++i) threads.emplace_back(worker);
            worker();
            for (auto& th : threads) th.join();

            bool all_pass = true;
            json jreports = json::array();
            for (const auto& r : reports) {
                std::cout << report_line(r) << "\n";
                jreports.push_back(report_json(r));
                all_pass &= r.verdict == "pass";
            }
            if (!json_out.empty()) write_text(json_out, jreports.dump(2) + "\n");
            return all_pass ? 0 : 1;
        }

        if (enumerate->parsed()) {
            if (m < 1 || n < 1) throw std::runtime_error("enumerate needs --m and --n");
            int A = area_budget < 0 ? 4 : area_budget;
            int N = labels < 0 ? std::max(1, k) * n : labels;
            json out;
            if (enum_what == "cpf") {
                out = json::array();
                for (const auto& p : enumerate_cpf(m, n, A, N)) out.push_back(to_json(p));
            } else if (enum_what == "pf") {
                out = json::array();
                for (const auto& g : enumerate_pf(m, n, std::max(1, k), N))
                    out.push_back(to_json(g));
            } else if (enum_what == "ptab") {
                out = json::array();
                for (const auto& t : enumerate_ptab(m, n, std::max(1, k), A, N))
                    out.push_back(to_json(t));
            } else if (enum_what == "chains") {
                ChainKind ck = chain_kind == "hat"   ? ChainKind::hat
                               : chain_kind == "bar" ? ChainKind::bar
                                                     : ChainKind::all;
                out = json::array();
                for (const auto& c : enumerate_chains(ck, chain_len, m, n, A, N))
                    out.push_back(to_json(c));
            } else {
                throw std::runtime_error("unknown enumeration: " + enum_what);
            }
            write_text(json_out, out.dump(2) + "\n");
            return 0;
        }

        if (table->parsed()) {
            if (table_what == "macdonald") {
                int N = nvars > 0 ? nvars : degree;
                write_text(json_out, to_json(macdonald_table(degree, N)).dump(2) + "\n");
            } else if (table_what == "phi") {
                if (!params.lambda) throw std::runtime_error("table phi needs --lambda");
                int N = nvars > 0 ? nvars : part_size(*params.lambda);
                SignedWordSum ws = phi_operator(basis_vector(Basis::s, *params.lambda, N));
                std::ostringstream os;
                os << "coeff,word\n";
                for (const auto& [c, w] : ws) os << "\"" << c.str() << "\",\"" << word_str(w) << "\"\n";
                write_text(csv_out.empty() ? json_out : csv_out, os.str());
            } else if (table_what == "calpha") {
                if (!params.lambda) throw std::runtime_error("table calpha needs --lambda");
                std::ostringstream os;
                os << "alpha,coeff\n";
                for (const auto& [alpha, c] : schur_to_calpha(*params.lambda)) {
                    os << "\"";
                    for (size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
                    os << "\",\"" << c.str() << "\"\n";
                }
                write_text(csv_out.empty() ? json_out : csv_out, os.str());
            } else {
                throw std::runtime_error("unknown table: " + table_what);
            }
            return 0;
        }

        if (series->parsed()) {
            if (m < 1 || n < 1 || k < 1) throw std::runtime_error("series needs --m --n --k");
            int A = area_budget < 0 ? 5 : area_budget;
            int N = labels < 0 ? k * n : labels;
            OmegaSeries s =
                series_what == "wilson" ? rhs_wilson(m, n, k, A, N) : rhs_main(m, n, k, A, N);
            write_text(csv_out.empty() ? json_out : csv_out, omega_csv(s));
            return 0;
        }

        if (gamma_cmd->parsed() || psi_cmd->parsed()) {
            std::ifstream in(input_path);
            if (!in) throw std::runtime_error("IOError: cannot read " + input_path);
            json j;
            in >> j;
            json out;
            if (gamma_cmd->parsed()) {
                PathTuple t = tuple_from_json(j);
                GlobalParkingFunction g = gamma(t);
                TupleStats st = global_stats(g);
                out = {{"image", to_json(g)},
                       {"stats",
                        {{"pdinv", st.pdinv},
                         {"ldinv", st.ldinv},
                         {"stat", st.stat},
                         {"skeleton", skeleton_str(global_skeleton(g))}}}};
            } else {
                GlobalParkingFunction g = global_from_json(j);
                PathTuple t = psi(g);
                TupleStats st = tuple_stats(t);
                out = {{"image", to_json(t)},
                       {"stats",
                        {{"pdinv", st.pdinv},
                         {"ldinv", st.ldinv},
                         {"stat", st.stat},
                         {"skeleton", skeleton_str(skeleton(t))}}}};
            }
            write_text(json_out, out.dump(2) + "\n");
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
