#include "thueq/errors.hpp"
#include "thueq/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace thueq;
using report::json;

namespace {

constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat arg_rat(const std::string& s, const char* flag) {
    try {
        return parse_rat(s);
    } catch (const std::exception&) {
        throw UsageError(std::string("cannot parse ") + flag + " value '" + s + "'");
    }
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

std::string pad(std::string s, size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified verification of a family of relative quartic Thue equations"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Print JSON instead of a table");

    std::string tmin_s = "100", max_abs_s = "3", C_s, t0_s, eps_s, out_path;
    int rmax = 60, kmax = 11, type = 0;
    bool timing = false, exact = false;

    auto* verify = app.add_subcommand("verify-all", "Run the full pipeline");
    verify->add_option("--tmin", tmin_s, "Lower bound for |t|");
    verify->add_option("--rmax", rmax, "Largest r for the hypergeometric bounds")->check(CLI::Range(1, 400));
    verify->add_option("--kmax", kmax, "Last descent step")->check(CLI::Range(2, 11));
    verify->add_option("--out", out_path, "Write the report here instead of stdout");
    verify->add_flag("--timing", timing, "Include wall-clock timings");

    auto* irr = app.add_subcommand("irreducible-list", "Values of t with reducible f_t");
    auto* small = app.add_subcommand("small-solutions", "Solutions with min(|x|,|y|) < 3");
    small->add_option("--tmin", tmin_s, "Lower bound for |t|");
    auto* en = app.add_subcommand("enumerate", "Normalized quadratic integers up to an absolute value");
    en->add_option("--max-abs", max_abs_s, "Bound for |x|");
    auto* desc = app.add_subcommand("descent", "Descent chain for one solution type");
    desc->add_option("--type", type, "0 or 3")->required()->check(CLI::IsMember({0, 3}));
    desc->add_option("--tmin", tmin_s, "Lower bound for |t|");
    desc->add_option("--kmax", kmax, "Last step")->check(CLI::Range(2, 11));
    desc->add_flag("--exact", exact, "Chain unrounded constants");
    auto* cons = app.add_subcommand("constants", "Irrationality measure constants");
    cons->add_option("--type", type, "0 or 3")->required()->check(CLI::IsMember({0, 3}));
    cons->add_option("--tmin", tmin_s, "Lower bound for |t|");
    cons->add_option("--rmax", rmax, "Largest r for the hypergeometric bounds")->check(CLI::Range(1, 400));
    auto* clin = app.add_subcommand("corollary-lin", "Bounds for |F_t(x,y)| <= C|t|");
    clin->add_option("--C", C_s, "Constant C > 0")->required();
    clin->add_option("--t0", t0_s, "Use this t0 instead of the minimal one");
    auto* ceps = app.add_subcommand("corollary-eps", "Threshold for |F_t(x,y)| <= |t|^(2-eps)");
    ceps->add_option("--eps", eps_s, "0 < eps < 1")->required();
    auto* rc = app.add_subcommand("rouche-certs", "Root enclosure certificates");
    rc->add_option("--tmin", tmin_s, "Lower bound for |t|");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify) {
            report::VerifyConfig cfg{arg_rat(tmin_s, "--tmin"), rmax, kmax, timing};
            if (cfg.tmin <= 12) throw UsageError("--tmin must exceed 12");
            auto res = report::verify_all(cfg);
            std::string out = res.doc.dump(2) + "\n";
            if (out_path.empty()) {
                std::cout << out;
            } else {
                std::ofstream f(out_path);
                if (!f) throw std::runtime_error("cannot write " + out_path);
                f << out;
            }
            const auto& a = res.doc["modules"]["assembly"];
            std::cerr << "verdict: " << a["verdict"].get<std::string>();
            if (!res.proven) std::cerr << " (" << a["diagnostic"].get<std::string>() << ")";
            std::cerr << "\n";
            return res.proven ? 0 : 1;
        }
        if (*irr) {
            auto ir = dioph::irreducibility_exceptions();
            json j = json::array();
            std::string text;
            for (const auto& t : ir.exceptions) {
                j.push_back(report::quad(t));
                text += t.str() + "\n";
            }
            emit(as_json, j, text);
            return 0;
        }
        if (*small) {
            Rat tmin = arg_rat(tmin_s, "--tmin");
            if (tmin < 0) throw UsageError("--tmin must be nonnegative");
            auto sols = dioph::small_solution_search(tmin);
            json j = {{"tmin", report::rat(tmin)}, {"solutions", json::array()}, {"t_values", json::array()}};
            std::string text = pad("t", 16) + pad("x", 16) + pad("y", 16) + "mu\n";
            for (const auto& s : sols) {
                j["solutions"].push_back(report::solution(s));
                text += pad(s.t.str(), 16) + pad(s.x.str(), 16) + pad(s.y.str(), 16) + s.mu.str() + "\n";
            }
            for (const auto& t : dioph::t_values(sols)) j["t_values"].push_back(t.str());
            text += std::to_string(sols.size()) + " solutions\n";
            emit(as_json, j, text);
            return 0;
        }
        if (*en) {
            Rat m = arg_rat(max_abs_s, "--max-abs");
            if (m < 0) throw UsageError("--max-abs must be nonnegative");
            auto xs = quadfield::enumerate_bounded(m, true);
            json j = json::array();
            std::string text;
            for (const auto& x : xs) {
                j.push_back(report::quad(x));
                text += pad(std::to_string(x.d), 6) + x.str() + "\n";
            }
            text += std::to_string(xs.size()) + " elements\n";
            emit(as_json, j, text);
            return 0;
        }
        if (*desc) {
            Rat tmin = arg_rat(tmin_s, "--tmin");
            if (tmin <= 0) throw UsageError("--tmin must be positive");
            auto ch = descent::run_descent(type, kmax, tmin, !exact);
            std::string text = pad("k", 4) + pad("c1", 12) + pad("c3", 12) + pad("c", 12) + pad("|y| >", 12) + "margin\n";
            for (const auto& s : ch.steps)
                text += pad(std::to_string(s.k), 4) + pad(decimal_hint(s.c1, 5), 12) + pad(decimal_hint(s.c3, 4), 12) +
                        pad(decimal_hint(s.c_out, 4), 12) + pad(decimal_hint(s.y_lower, 4), 12) +
                        decimal_hint(s.nonvanish_margin, 4) + "\n";
            text += std::string("chain ") + (ch.ok ? "ok" : "failed: " + ch.diagnostic) + "\n";
            emit(as_json, report::chain(ch), text);
            return ch.ok ? 0 : 1;
        }
        if (*cons) {
            Rat tmin = arg_rat(tmin_s, "--tmin");
            auto m = measure::measure_constants(type, tmin, rmax);
            std::string text;
            for (const auto& l : m.lines)
                text += pad(l.name, 16) + pad(decimal_hint(l.lhs, 6), 14) + (l.strict ? "<  " : "<= ") +
                        pad(decimal_hint(l.rhs, 6), 14) + (l.ok ? "ok" : "FAIL") + "\n";
            text += "c = " + decimal_hint(m.c_exact, 6) + " |t| <= " + decimal_hint(m.c_coeff) + " |t|\n";
            emit(as_json, report::constants(m), text);
            return m.ok ? 0 : 1;
        }
        if (*clin) {
            Rat C = arg_rat(C_s, "--C");
            if (C <= 0) throw UsageError("--C must be positive");
            std::optional<Rat> t0;
            if (!t0_s.empty()) t0 = arg_rat(t0_s, "--t0");
            auto r = measure::corollary_lin(C, t0);
            std::string text = "t0 = " + fraction_string(r.t0) + "\nkappa_hi(t0) = " + fraction_string(r.kappa_hi_t0) +
                               "\nC0 = " + decimal_hint(r.C0) + "\n";
            emit(as_json, report::corollary(r), text);
            return 0;
        }
        if (*ceps) {
            Rat eps = arg_rat(eps_s, "--eps");
            if (eps <= 0 || eps >= 1) throw UsageError("--eps must lie in (0, 1)");
            auto r = measure::corollary_eps(eps);
            std::string text = "t0 = " + fraction_string(r.t0) + " (" + decimal_hint(r.t0) + ")\n";
            emit(as_json, report::corollary(r), text);
            return 0;
        }
        if (*rc) {
            Rat tmin = arg_rat(tmin_s, "--tmin");
            if (tmin <= 0) throw UsageError("--tmin must be positive");
            auto certs = rouche::root_certificates(tmin);
            certs.push_back(rouche::certify_high_order(rouche::HighOrder::B, tmin));
            certs.push_back(rouche::certify_high_order(rouche::HighOrder::B3, tmin));
            json j = json::array();
            std::string text;
            bool all = true;
            for (const auto& c : certs) {
                j.push_back(report::cert(c));
                all = all && c.verified;
                text += pad(c.label, 8) + pad(decimal_hint(c.radius_c) + "/|t|^" + std::to_string(c.radius_exp), 20) +
                        pad(decimal_hint(c.margin, 4), 14) + (c.verified ? "verified" : "FAIL " + c.diagnostic) + "\n";
            }
            emit(as_json, j, text);
            return all ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return 2;
    }
    return kUsage;
}
