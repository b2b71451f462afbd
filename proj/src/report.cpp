#include "thueq/report.hpp"

#include "thueq/hyperchi.hpp"

#include <chrono>

namespace thueq::report {

json rat(const Rat& x) { return {{"exact", fraction_string(x)}, {"approx", decimal_hint(x, 4)}}; }

json quad(const quadfield::QuadInt& x) {
    return {{"d", x.d}, {"a", x.a.get_str()}, {"b", x.b.get_str()}, {"str", x.str()}};
}

json solution(const dioph::Solution& s) {
    json j = {{"d", s.d}, {"t", s.t.str()}, {"x", s.x.str()}, {"y", s.y.str()}, {"mu", s.mu.str()}};
    if (s.type_index) j["type"] = *s.type_index;
    return j;
}

json cert(const rouche::EnclosureCert& c) {
    json maj = json::array();
    for (const auto& [e, v] : c.majorant) maj.push_back({{"exp", e}, {"coeff", rat(v)}});
    return {{"label", c.label},
            {"radius", rat(c.radius_c)},
            {"radius_exp", c.radius_exp},
            {"tmin", rat(c.tmin)},
            {"verified", c.verified},
            {"lhs", rat(c.lhs)},
            {"rhs", rat(c.rhs)},
            {"margin", rat(c.margin)},
            {"dominant_exp", c.dominant_exp},
            {"majorant", maj},
            {"diagnostic", c.diagnostic}};
}

json step(const descent::StepRecord& s) {
    return {{"type", s.type_index},
            {"k", s.k},
            {"c0_in", rat(s.c0_in)},
            {"c1", rat(s.c1)},
            {"c2", rat(s.c2)},
            {"c3", rat(s.c3)},
            {"c_exact", rat(s.c_exact)},
            {"c_out", rat(s.c_out)},
            {"y_lower", rat(s.y_lower)},
            {"nonvanish_ok", s.nonvanish_ok},
            {"nonvanish_margin", rat(s.nonvanish_margin)},
            {"P_degree", s.P_degree},
            {"Vt_degree", s.Vt_degree},
            {"pade", {{"deg_num", s.pade.deg_num},
                      {"deg_den", s.pade.deg_den},
                      {"U", to_string(s.pade.U, "s")},
                      {"V", to_string(s.pade.V, "s")}}}};
}

json chain(const descent::DescentChain& c) {
    json steps = json::array();
    for (const auto& s : c.steps) steps.push_back(step(s));
    json j = {{"type", c.type_index},
              {"tmin", rat(c.tmin)},
              {"rounded", c.rounded},
              {"step1", {{"exact", rat(c.s1.exact)}, {"stated", rat(c.s1.stated)}, {"ok", c.s1.ok}}}};
    if (c.s2) j["step2"] = {{"exact", rat(c.s2->exact)}, {"stated", rat(c.s2->stated)}, {"ok", c.s2->ok}};
    j["steps"] = steps;
    j["ok"] = c.ok;
    j["y_lower"] = rat(c.y_lower);
    j["diagnostic"] = c.diagnostic;
    return j;
}

json constants(const measure::MeasureConstants& m) {
    json lines = json::array();
    for (const auto& l : m.lines)
        lines.push_back({{"name", l.name}, {"lhs", rat(l.lhs)}, {"rhs", rat(l.rhs)}, {"strict", l.strict}, {"ok", l.ok}});
    return {{"type", m.type_index},
            {"tmin", rat(m.tmin)},
            {"stated", {{"k0", rat(m.k0)},
                        {"Q_coeff", rat(m.Q_coeff)},
                        {"l0_coeff", rat(m.l0_coeff)},
                        {"E_div", rat(m.E_div)},
                        {"qmin_coeff", rat(m.qmin_coeff)},
                        {"c_coeff", rat(m.c_coeff)}}},
            {"exact", {{"k0", rat(m.k0_exact)},
                       {"Q_coeff", rat(m.Q_exact)},
                       {"l0_coeff", rat(m.l0_exact)},
                       {"E_div", rat(m.E_exact)},
                       {"qmin_coeff", rat(m.qmin_exact)},
                       {"c_coeff", rat(m.c_exact)}}},
            {"lines", lines},
            {"ok", m.ok},
            {"failing_line", m.failing_line}};
}

json proof(const measure::ProofReport& p) {
    json gates = json::array();
    for (const auto& g : p.gates) gates.push_back({{"name", g.name}, {"ok", g.ok}, {"detail", g.detail}});
    return {{"tmin", rat(p.tmin)},
            {"kappa_hi", p.kappa_hi ? rat(*p.kappa_hi) : json(nullptr)},
            {"contradiction_upper", p.contradiction_upper ? rat(*p.contradiction_upper) : json(nullptr)},
            {"descent_lower_0", rat(p.descent_lower_0)},
            {"descent_lower_3", rat(p.descent_lower_3)},
            {"gates", gates},
            {"verdict", p.proven ? "proven" : "inconclusive"},
            {"diagnostic", p.diagnostic}};
}

json corollary(const measure::CorollaryLin& c) {
    return {{"C", rat(c.C)},
            {"t0", rat(c.t0)},
            {"kappa_hi_t0", rat(c.kappa_hi_t0)},
            {"terms", {rat(c.term_threshold), rat(c.term_small), rat(c.term_measure)}},
            {"C0", rat(c.C0)},
            {"consistency_ok", c.consistency_ok},
            {"family_coeff", rat(c.family_coeff)}};
}

namespace {

json gates(const measure::EpsGates& g) {
    return {{"t", rat(g.t)}, {"kappa_hi", rat(g.kappa_hi)}, {"i", g.g1}, {"ii", g.g2}, {"iii", g.g3}};
}

}  // namespace

json corollary(const measure::CorollaryEps& c) {
    return {{"eps", rat(c.eps)}, {"t0", rat(c.t0)}, {"at_t0", gates(c.at_t0)}, {"at_2t0", gates(c.at_2t0)}};
}

VerifyResult verify_all(const VerifyConfig& cfg) {
    using clock = std::chrono::steady_clock;
    json timing = json::object();
    auto timed = [&](const char* name, auto fn) {
        auto t0 = clock::now();
        auto r = fn();
        timing[name] = std::chrono::duration<double>(clock::now() - t0).count();
        return r;
    };

    json doc;
    doc["schema"] = kSchema;
    doc["tool_version"] = kToolVersion;
    doc["config"] = {{"tmin", rat(cfg.tmin)}, {"rmax", cfg.rmax}, {"kmax", cfg.kmax}, {"kappa_grid_digits", 2}};

    json mods;
    auto ir = timed("irreducibility", [] { return dioph::irreducibility_exceptions(); });
    json ex = json::array();
    for (const auto& t : ir.exceptions) ex.push_back(t.str());
    mods["irreducibility"] = {{"exceptions", ex}};

    json certs = json::array();
    timed("rouche", [&] {
        for (const auto& c : rouche::root_certificates(cfg.tmin)) certs.push_back(cert(c));
        for (auto w : {rouche::HighOrder::B, rouche::HighOrder::B3}) certs.push_back(cert(rouche::certify_high_order(w, cfg.tmin)));
        return 0;
    });
    mods["rouche"] = certs;

    measure::ProofReport p = timed("assembly", [&] {
        return measure::theorem_assembly(cfg.tmin, {cfg.kmax, cfg.rmax});
    });
    auto sols = dioph::small_solution_search(cfg.tmin);
    json sj = json::array();
    for (const auto& s : sols) sj.push_back(solution(s));
    mods["small_solutions"] = sj;
    json d = json::object();
    if (p.chain0) d["type0"] = chain(*p.chain0);
    if (p.chain3) d["type3"] = chain(*p.chain3);
    mods["descent"] = d;
    json m = json::object();
    if (p.m0) m["type0"] = constants(*p.m0);
    if (p.m3) m["type3"] = constants(*p.m3);
    mods["measure"] = m;
    mods["assembly"] = proof(p);
    doc["modules"] = mods;
    doc["verdict"] = p.proven ? "proven" : "inconclusive";
    if (cfg.timing) doc["timing"] = timing;
    return {doc, p.proven};
}

}  // namespace thueq::report
