#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "taujac/interlace.hpp"
#include "taujac/jacobi.hpp"
#include "taujac/realroots.hpp"
#include "taujac/scanner.hpp"
#include "taujac/stability.hpp"

using namespace taujac;
using nlohmann::json;

namespace {

Rational rat(const std::string& s) { return Rational::parse(s); }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

std::vector<Rational> parse_range(const std::string& spec) {
    const auto f = split(spec, ':');
    if (f.size() != 3) throw std::invalid_argument("range must be lo:hi:step, got '" + spec + "'");
    return rational_range(rat(f[0]), rat(f[1]), rat(f[2]));
}

RatPoly parse_poly(const std::string& s) {
    std::vector<Rational> c;
    for (const auto& tok : split(s, ',')) c.push_back(rat(tok));
    return RatPoly(std::move(c));
}

json coeffs_json(const RatPoly& p) {
    json arr = json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

json roots_json(const RootList& rl) {
    json arr = json::array();
    for (const RootRec& r : rl.roots) {
        json e;
        e["lo"] = r.lo.str();
        e["hi"] = r.hi.str();
        e["mid"] = r.mid.str();
        e["mid_decimal"] = r.mid.to_double();
        e["mult"] = r.multiplicity;
        arr.push_back(e);
    }
    return arr;
}

json params_json(int n, const Rational& a, const Rational& b) {
    json j;
    j["n"] = n;
    j["alpha"] = a.str();
    j["beta"] = b.str();
    return j;
}

json interlace_json(const InterlaceResult& res) {
    json j;
    j["verdict"] = to_string(res.verdict);
    json cert;
    cert["sequence"] = json::array();
    for (const auto& e : res.sequence)
        cert["sequence"].push_back(json::array({std::string(1, e.owner), e.lo.str(), e.hi.str()}));
    if (!res.violation.empty()) cert["violation"] = res.violation;
    j["certificate"] = cert;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tau-method Jacobi polynomial zero toolbox"};
    app.require_subcommand(1);

    std::string alpha_s = "0", beta_s = "0", a_weight_s = "1";
    int n = 4;

    // --- phi ---
    auto* cmd_phi = app.add_subcommand("phi", "print phi_n (or the full tower Phi_n) coefficients");
    bool full = false, beta_shift = false;
    cmd_phi->add_option("--n", n)->required();
    cmd_phi->add_option("--alpha", alpha_s)->required();
    cmd_phi->add_option("--beta", beta_s)->required();
    cmd_phi->add_flag("--full", full, "all derivative orders, not only the even ones");
    cmd_phi->add_flag("--beta-shift", beta_shift, "use the (alpha, beta-1) tower (with --full)");

    // --- roots ---
    auto* cmd_roots = app.add_subcommand("roots", "isolate the real zeros of phi_n");
    std::string precision_s = "1e-8";
    cmd_roots->add_option("--n", n)->required();
    cmd_roots->add_option("--alpha", alpha_s)->required();
    cmd_roots->add_option("--beta", beta_s)->required();
    cmd_roots->add_option("--precision", precision_s);

    // --- interlace ---
    auto* cmd_inter = app.add_subcommand("interlace", "interlacing verdict for a polynomial pair");
    std::string pair_spec = "phi:n,n-1", p_spec, q_spec;
    cmd_inter->add_option("--pair", pair_spec, "phi:n,n-1 | phi:n,n-2 | custom");
    cmd_inter->add_option("--n", n);
    cmd_inter->add_option("--alpha", alpha_s);
    cmd_inter->add_option("--beta", beta_s);
    cmd_inter->add_option("--p", p_spec, "ascending coefficients, comma separated (custom)");
    cmd_inter->add_option("--q", q_spec, "ascending coefficients, comma separated (custom)");

    // --- stability ---
    auto* cmd_stab = app.add_subcommand("stability", "Routh-Hurwitz verdicts for Phi_n, f, g");
    std::string target = "thm4";
    cmd_stab->add_option("--target", target, "thm4 | f | g")->required();
    cmd_stab->add_option("--n", n)->required();
    cmd_stab->add_option("--alpha", alpha_s)->required();
    cmd_stab->add_option("--beta", beta_s)->required();
    cmd_stab->add_option("--A", a_weight_s);

    // --- scan ---
    auto* cmd_scan = app.add_subcommand("scan", "grid scan; CSV rows plus a JSON summary");
    std::string check = "conjA", alpha_range, beta_range, n_range = "4:20", csv_path, a_list;
    int jobs = 0;
    cmd_scan->add_option("--check", check, "conjA | conjB | ccw | lemma-derivs | chains | sec5")
        ->required();
    cmd_scan->add_option("--alpha-range", alpha_range, "lo:hi:step")->required();
    cmd_scan->add_option("--beta-range", beta_range, "lo:hi:step")->required();
    cmd_scan->add_option("--n-range", n_range, "lo:hi");
    cmd_scan->add_option("--jobs", jobs);
    cmd_scan->add_option("--csv", csv_path, "CSV output path (default scan_<check>.csv)");
    cmd_scan->add_option("--A", a_list, "comma-separated A weights for chains");

    // --- threshold ---
    auto* cmd_thr = app.add_subcommand("threshold", "bisect the Theorem-4 stability onset in alpha");
    std::string bracket_s = "9/10:1", tol_s = "1e-5";
    cmd_thr->add_option("--n", n)->required();
    cmd_thr->add_option("--beta", beta_s)->required();
    cmd_thr->add_option("--bracket", bracket_s, "lo:hi");
    cmd_thr->add_option("--tol", tol_s);

    // --- vieta ---
    auto* cmd_vieta = app.add_subcommand("vieta", "exact zero sums of phi_n, n = 4..n_max");
    int n_max = 40;
    cmd_vieta->add_option("--n-max", n_max)->required();
    cmd_vieta->add_option("--alpha", alpha_s)->required();
    cmd_vieta->add_option("--beta", beta_s)->required();
    std::string vieta_csv;
    cmd_vieta->add_option("--csv", vieta_csv, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_phi) {
            const JacobiParams prm{n, rat(alpha_s), rat(beta_s)};
            const RatPoly p = full ? phi_full(prm, beta_shift) : phi(prm);
            json j;
            j["params"] = params_json(n, prm.alpha, prm.beta);
            j["full"] = full;
            if (full) j["beta_shift"] = beta_shift;
            j["degree"] = p.degree();
            j["coeffs"] = coeffs_json(p);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*cmd_roots) {
            const Rational a = rat(alpha_s), b = rat(beta_s);
            const RatPoly p = phi(n, a, b);
            const RootList rl = isolate(p, rat(precision_s));
            json j;
            j["params"] = params_json(n, a, b);
            j["coeffs"] = coeffs_json(p);
            j["roots"] = roots_json(rl);
            j["all_real"] = rl.all_real;
            j["negative_count"] = rl.negative_count;
            j["verdict"] = to_string(all_negative_simple(p));
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*cmd_inter) {
            RatPoly p, q;
            json j;
            if (pair_spec == "custom") {
                p = parse_poly(p_spec);
                q = parse_poly(q_spec);
            } else {
                const auto f = split(pair_spec, ':');
                if (f.size() != 2 || f[0] != "phi")
                    throw std::invalid_argument("--pair must be phi:<m1>,<m2> or custom");
                auto resolve = [&](const std::string& tok) {
                    if (tok == "n") return n;
                    if (tok == "n-1" || tok == "N-1") return n - 1;
                    if (tok == "n-2" || tok == "N-2") return n - 2;
                    return std::stoi(tok);
                };
                const auto idx = split(f[1], ',');
                if (idx.size() != 2) throw std::invalid_argument("--pair must name two members");
                const Rational a = rat(alpha_s), b = rat(beta_s);
                p = phi(resolve(idx[0]), a, b);
                q = phi(resolve(idx[1]), a, b);
                j["params"] = params_json(n, a, b);
            }
            j["pair"] = pair_spec;
            j.update(interlace_json(interlace_check(p, q)));
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*cmd_stab) {
            const Rational a = rat(alpha_s), b = rat(beta_s);
            StabilityVerdict v;
            if (target == "thm4")
                v = stability_of_theorem4(n, a, b);
            else if (target == "f")
                v = stability_of_fg(FG::F, n, a, b, rat(a_weight_s));
            else if (target == "g")
                v = stability_of_fg(FG::G, n, a, b, rat(a_weight_s));
            else
                throw std::invalid_argument("--target must be thm4, f or g");
            json j;
            j["target"] = target;
            j["params"] = params_json(n, a, b);
            if (target != "thm4") j["A"] = rat(a_weight_s).str();
            j["stable"] = v.stable;
            if (v.failure_witness) {
                j["witness"]["stage"] = v.failure_witness->stage;
                j["witness"]["quantity"] = v.failure_witness->quantity.str();
            } else {
                j["witness"] = nullptr;
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*cmd_scan) {
            GridSpec grid;
            grid.alphas = parse_range(alpha_range);
            grid.betas = parse_range(beta_range);
            const auto nr = split(n_range, ':');
            if (nr.size() != 2) throw std::invalid_argument("--n-range must be lo:hi");
            grid.n_lo = std::stoi(nr[0]);
            grid.n_hi = std::stoi(nr[1]);
            grid.jobs = jobs;
            if (!a_list.empty()) {
                grid.a_samples.clear();
                for (const auto& tok : split(a_list, ',')) grid.a_samples.push_back(rat(tok));
            }
            std::vector<ScanReport> reports;
            if (check == "conjA")
                reports = scan_conjecture_a(grid);
            else if (check == "conjB")
                reports = scan_conjecture_b(grid);
            else if (check == "ccw")
                reports = scan_ccw(grid);
            else if (check == "lemma-derivs")
                reports = check_section2_lemma(grid);
            else if (check == "chains")
                reports = check_chains(grid);
            else if (check == "sec5")
                reports = check_section5(grid);
            else
                throw std::invalid_argument("unknown --check '" + check + "'");
            const std::string path = csv_path.empty() ? "scan_" + check + ".csv" : csv_path;
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
            write_csv(out, reports);
            json summary = summary_json(reports);
            summary["check"] = check;
            summary["csv"] = path;
            std::cout << summary.dump(2) << "\n";
            return has_unexpected_failure(reports) ? 2 : 0;
        }
        if (*cmd_thr) {
            const auto f = split(bracket_s, ':');
            if (f.size() != 2) throw std::invalid_argument("--bracket must be lo:hi");
            const Rational b = rat(beta_s), tol = rat(tol_s);
            const Rational star = find_threshold_thm4(n, b, {rat(f[0]), rat(f[1])}, tol);
            json j;
            j["n"] = n;
            j["beta"] = b.str();
            j["bracket"] = json::array({rat(f[0]).str(), rat(f[1]).str()});
            j["tol"] = tol.str();
            j["alpha_star"] = star.str();
            j["decimal"] = star.to_double();
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*cmd_vieta) {
            const Rational a = rat(alpha_s), b = rat(beta_s);
            const auto sums = vieta_asymptotics(n_max, a, b);
            std::ostringstream csv;
            csv << "n,sum,decimal\n";
            for (const auto& [nn, s] : sums)
                csv << nn << "," << s.str() << "," << s.to_double() << "\n";
            if (vieta_csv.empty()) {
                std::cout << csv.str();
            } else {
                std::ofstream out(vieta_csv);
                if (!out) throw std::runtime_error("cannot open '" + vieta_csv + "'");
                out << csv.str();
                std::cout << "wrote " << sums.size() << " rows to " << vieta_csv << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
