// qtmom: exact moments of transmission eigenvalues and proper delay times in
// chaotic-cavity transport, their asymptotic coefficients and generating
// functions, plus sampling/quadrature oracles. Batch CLI, JSON/CSV output.

#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qtmom/asympt.hpp"
#include "qtmom/bigfloat.hpp"
#include "qtmom/moments.hpp"
#include "qtmom/oracles.hpp"
#include "qtmom/series.hpp"
#include "qtmom/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qtmom;

namespace {

constexpr const char* kVersion = "0.1.0";

struct OutputOpts {
    std::string format = "json";
    int digits = 30;
};

Rational parse_q(const std::string& s) { return Rational::from_string(s); }

json repro_block(const json& inputs, std::optional<std::uint64_t> seed = std::nullopt) {
    json r;
    r["version"] = kVersion;
    if (seed) r["seed"] = *seed;
    r["inputs"] = inputs;
    return r;
}

void emit(const std::string& text) { std::fputs(text.c_str(), stdout); }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

struct CsvRow {
    std::string k, n, p, value_rational, value_decimal, flags;
};

std::string csv_render(const json& repro, const std::vector<CsvRow>& rows) {
    std::ostringstream os;
    os << "# qtmom " << kVersion << "\n";
    for (auto it = repro["inputs"].begin(); it != repro["inputs"].end(); ++it)
        os << "# " << it.key() << "=" << (it->is_string() ? it->get<std::string>() : it->dump())
           << "\n";
    os << "k,n,p,value_rational,value_decimal,flags\n";
    for (const auto& r : rows)
        os << r.k << "," << r.n << "," << r.p << "," << csv_escape(r.value_rational) << ","
           << r.value_decimal << "," << csv_escape(r.flags) << "\n";
    return os.str();
}

std::string flags_string(const MomentResult& m) {
    std::string f;
    if (m.omitted_phi()) f = "OMITTED_PHI_TERM";
    return f;
}

int cmd_moment(const std::string& ensemble, int beta, int delta_i, long k, long n,
               const std::string& a_s, const std::string& b_s, const std::string& u_s,
               const std::string& v_s, const std::string& w_s, long m_opt,
               const OutputOpts& out) {
    json inputs;
    inputs["ensemble"] = ensemble;
    inputs["beta"] = beta;
    inputs["k"] = k;
    inputs["n"] = n;
    MomentResult res;
    if (ensemble == "jacobi") {
        Rational a, b;
        if (m_opt >= 0) {
            auto p = map_transmission(SymmetryClass::make(beta, delta_i), n, m_opt);
            a = p.a;
            b = p.b;
            inputs["m"] = m_opt;
            inputs["delta"] = delta_i;
        } else {
            if (a_s.empty() || b_s.empty())
                throw DomainError("moment: jacobi needs --a and --b (or --m with --delta)");
            a = parse_q(a_s);
            b = parse_q(b_s);
        }
        inputs["a"] = a.to_string();
        inputs["b"] = b.to_string();
        res = moment_jacobi(beta, k, n, a, b);
    } else if (ensemble == "laguerre") {
        Rational b;
        if (!w_s.empty()) {
            Rational w = parse_q(w_s);
            b = map_delay(beta, n, w).b;
            inputs["w"] = w.to_string();
        } else if (!b_s.empty()) {
            b = parse_q(b_s);
        } else {
            throw DomainError("moment: laguerre needs --b or --w");
        }
        inputs["b"] = b.to_string();
        res = moment_laguerre_neg(beta, k, n, b);
    } else if (ensemble == "selberg-like") {
        if (u_s.empty() || v_s.empty())
            throw DomainError("moment: selberg-like needs --u and --v");
        Rational u = parse_q(u_s), v = parse_q(v_s);
        inputs["u"] = u.to_string();
        inputs["v"] = v.to_string();
        res = moment_selberg_like(beta, k, n, u, v);
    } else {
        throw DomainError("moment: unknown ensemble '" + ensemble + "'");
    }

    json rep = repro_block(inputs);
    if (out.format == "csv") {
        CsvRow row{std::to_string(k), std::to_string(n), "", res.value.to_string(),
                   decimal_string(res.value, out.digits), flags_string(res)};
        emit(csv_render(rep, {row}));
        return 0;
    }
    json j;
    j["command"] = "moment";
    j["value"] = res.value.to_string();
    j["value_decimal"] = decimal_string(res.value, out.digits);
    j["formula"] = res.formula;
    j["flags"] = json::array();
    if (res.omitted_phi()) j["flags"].push_back("OMITTED_PHI_TERM");
    j["repro"] = rep;
    emit(j.dump(2) + "\n");
    return 0;
}

int cmd_coeff(const std::string& target, int beta, const std::string& delta_s, long k, int p,
              const std::string& u_s, const std::string& v_s, const std::string& w_s,
              const OutputOpts& out) {
    Rational delta = delta_s.empty() ? Rational(0) : parse_q(delta_s);
    json inputs;
    inputs["target"] = target;
    inputs["beta"] = beta;
    inputs["delta"] = delta.to_string();
    inputs["k"] = k;
    inputs["p"] = p;
    Rational value;
    bool conjecture = false;
    if (target == "delay") {
        if (w_s.empty()) throw DomainError("coeff: delay needs --w");
        Rational w = parse_q(w_s);
        inputs["w"] = w.to_string();
        value = delay_coeff(beta, k, p, w);
    } else if (target == "transmission" || target == "transmission-diff") {
        if (u_s.empty()) throw DomainError("coeff: transmission needs --u");
        Rational u = parse_q(u_s);
        inputs["u"] = u.to_string();
        CoeffResult r = target == "transmission" ? trans_coeff(beta, delta, k, p, u)
                                                 : trans_diff_coeff(beta, delta, k, p, u);
        value = r.value;
        conjecture = r.conjecture;
    } else if (target == "selberg-like") {
        if (u_s.empty() || v_s.empty())
            throw DomainError("coeff: selberg-like needs --u and --v");
        Rational u = parse_q(u_s), v = parse_q(v_s);
        inputs["u"] = u.to_string();
        inputs["v"] = v.to_string();
        value = selberg_like_coeff(beta, k, p, u, v);
    } else if (target == "laguerre-positive") {
        if (w_s.empty()) throw DomainError("coeff: laguerre-positive needs --w");
        Rational w = parse_q(w_s);
        inputs["w"] = w.to_string();
        value = laguerre_pos_leading(k, w);
    } else {
        throw DomainError("coeff: unknown target '" + target + "'");
    }

    json rep = repro_block(inputs);
    if (out.format == "csv") {
        CsvRow row{std::to_string(k), "", std::to_string(p), value.to_string(),
                   decimal_string(value, out.digits), conjecture ? "conjecture" : ""};
        emit(csv_render(rep, {row}));
        return 0;
    }
    json j;
    j["command"] = "coeff";
    j["value"] = value.to_string();
    j["value_decimal"] = decimal_string(value, out.digits);
    j["conjecture"] = conjecture;
    bool physical = delta.is_integer() && delta.fits_long() &&
                    is_physical_symmetry_pair(beta, static_cast<int>(delta.to_long()));
    j["delta_physical"] = physical;
    j["repro"] = rep;
    emit(j.dump(2) + "\n");
    return 0;
}

GenFunFamily family_from_name(const std::string& name) {
    static const std::map<std::string, GenFunFamily> names = {
        {"narayana-rho", GenFunFamily::NarayanaRho},
        {"d0", GenFunFamily::D0},
        {"t0", GenFunFamily::T0},
        {"d1", GenFunFamily::D1},
        {"t1", GenFunFamily::T1},
        {"d2-beta2", GenFunFamily::D2Beta2},
        {"t2-beta2-delta", GenFunFamily::T2Beta2Delta},
        {"delta-t2-beta2-delta", GenFunFamily::DeltaT2Beta2Delta},
        {"d2-beta1", GenFunFamily::D2Beta1},
        {"t2-beta1-delta0", GenFunFamily::T2Beta1Delta0},
        {"delta-t2-beta1-delta0", GenFunFamily::DeltaT2Beta1Delta0},
        {"t2-beta1-conjectured", GenFunFamily::T2Beta1DeltaConjectured},
        {"selberg-h", GenFunFamily::SelbergH},
    };
    auto it = names.find(name);
    if (it == names.end())
        throw UnsupportedFamilyError("genfun: unknown family '" + name + "'");
    return it->second;
}

int cmd_genfun(const std::string& family, int beta, const std::string& delta_s, long order,
               const std::string& u_s, const std::string& v_s, const std::string& w_s,
               const OutputOpts& out) {
    GenFunId id;
    id.family = family_from_name(family);
    json inputs;
    inputs["family"] = family;
    std::string main_param = !u_s.empty() ? u_s : w_s;
    if (main_param.empty()) throw DomainError("genfun: needs --u or --w");
    id.u = parse_q(main_param);
    inputs[!u_s.empty() ? "u" : "w"] = id.u.to_string();
    if (!v_s.empty()) {
        id.v = parse_q(v_s);
        inputs["v"] = id.v.to_string();
    }
    if (!delta_s.empty()) {
        id.delta = parse_q(delta_s);
        inputs["delta"] = id.delta.to_string();
    }
    id.beta = beta;
    inputs["beta"] = beta;
    inputs["order"] = order;
    auto r = genfun_eval(id, static_cast<std::size_t>(order));

    json rep = repro_block(inputs);
    if (out.format == "csv") {
        std::vector<CsvRow> rows;
        for (std::size_t i = 0; i < r.series.order(); ++i)
            rows.push_back({std::to_string(i), "", "", r.series[i].to_string(),
                            decimal_string(r.series[i], out.digits),
                            r.conjecture ? "conjecture" : ""});
        emit(csv_render(rep, rows));
        return 0;
    }
    json j;
    j["command"] = "genfun";
    j["conjecture"] = r.conjecture;
    j["coefficients"] = json::array();
    for (std::size_t i = 0; i < r.series.order(); ++i)
        j["coefficients"].push_back(r.series[i].to_string());
    j["repro"] = rep;
    emit(j.dump(2) + "\n");
    return 0;
}

int cmd_selberg(int beta, const std::string& a_s, const std::string& b_s, long n,
                const OutputOpts& out) {
    Rational a = parse_q(a_s), b = parse_q(b_s);
    BigFloat c = selberg_constant(beta, a, b, n);
    json inputs;
    inputs["beta"] = beta;
    inputs["a"] = a.to_string();
    inputs["b"] = b.to_string();
    inputs["n"] = n;
    json rep = repro_block(inputs);
    if (out.format == "csv") {
        CsvRow row{"", std::to_string(n), "", "", c.to_string(out.digits), ""};
        emit(csv_render(rep, {row}));
        return 0;
    }
    json j;
    j["command"] = "selberg";
    j["value_decimal"] = c.to_string(out.digits);
    j["repro"] = rep;
    emit(j.dump(2) + "\n");
    return 0;
}

int cmd_verify(const std::string& suite, long kmax, const OutputOpts& out) {
    auto checks = run_verify_suite(suite, kmax);
    bool all = true;
    json list = json::array();
    for (const auto& c : checks) {
        all = all && c.pass;
        json e;
        e["identity"] = c.name;
        e["cases"] = c.cases;
        e["pass"] = c.pass;
        list.push_back(e);
    }
    json inputs;
    inputs["suite"] = suite;
    inputs["kmax"] = kmax;
    json rep = repro_block(inputs);
    if (out.format == "csv") {
        std::vector<CsvRow> rows;
        for (const auto& c : checks)
            rows.push_back({"", "", "", c.name, c.pass ? "1" : "0",
                            std::to_string(c.cases) + " cases"});
        emit(csv_render(rep, rows));
    } else {
        json j;
        j["command"] = "verify";
        j["checks"] = list;
        j["all_pass"] = all;
        j["repro"] = rep;
        emit(j.dump(2) + "\n");
    }
    return all ? 0 : 2;
}

int cmd_sample(const std::string& ensemble, int beta, long n, const std::string& a_s,
               const std::string& b_s, std::uint64_t seed, long k, long samples,
               const OutputOpts& out) {
    SamplerKind kind = ensemble == "laguerre" ? SamplerKind::Laguerre : SamplerKind::Jacobi;
    if (ensemble != "laguerre" && ensemble != "jacobi")
        throw DomainError("sample: unknown ensemble '" + ensemble + "'");
    Rational a = a_s.empty() ? Rational(0) : parse_q(a_s);
    Rational b = b_s.empty() ? Rational(0) : parse_q(b_s);
    json inputs;
    inputs["ensemble"] = ensemble;
    inputs["beta"] = beta;
    inputs["n"] = n;
    inputs["a"] = a.to_string();
    inputs["b"] = b.to_string();
    json rep = repro_block(inputs, seed);
    if (samples > 0) {
        inputs["k"] = k;
        inputs["samples"] = samples;
        rep = repro_block(inputs, seed);
        MCEstimate est = mc_moment(kind, beta, k, n, a, b, samples, seed);
        if (out.format == "csv") {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", est.mean);
            CsvRow row{std::to_string(k), std::to_string(n), "", "", buf, "mc"};
            emit(csv_render(rep, {row}));
            return 0;
        }
        json j;
        j["command"] = "sample";
        j["mc"] = {{"mean", est.mean},
                   {"stderr", est.stderr_},
                   {"n_samples", est.n_samples}};
        j["repro"] = rep;
        emit(j.dump(2) + "\n");
        return 0;
    }
    EigenSample s = sample_ensemble(kind, beta, n, a, b, seed);
    if (out.format == "csv") {
        std::vector<CsvRow> rows;
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", s.values[i]);
            rows.push_back({std::to_string(i), std::to_string(n), "", "", buf, ""});
        }
        emit(csv_render(rep, rows));
        return 0;
    }
    json j;
    j["command"] = "sample";
    j["eigenvalues"] = s.values;
    j["repro"] = rep;
    emit(j.dump(2) + "\n");
    return 0;
}

int cmd_density(const std::string& kind, long k, const std::string& u_s,
                const std::string& v_s, const std::string& w_s, const OutputOpts& out) {
    json inputs;
    inputs["kind"] = kind;
    inputs["k"] = k;
    double value = 0;
    SupportInterval sup;
    if (kind == "marchenko-pastur") {
        if (w_s.empty()) throw DomainError("density: marchenko-pastur needs --w");
        Rational w = parse_q(w_s);
        inputs["w"] = w.to_string();
        value = limiting_moment(LimitingKind::MarchenkoPastur, k, w);
        sup = marchenko_pastur_support(w);
    } else if (kind == "jacobi-limit") {
        if (u_s.empty() || v_s.empty())
            throw DomainError("density: jacobi-limit needs --u and --v");
        Rational u = parse_q(u_s), v = parse_q(v_s);
        inputs["u"] = u.to_string();
        inputs["v"] = v.to_string();
        value = limiting_moment(LimitingKind::JacobiLimit, k, u, v);
        sup = jacobi_limit_support(u, v);
    } else {
        throw DomainError("density: unknown kind '" + kind + "'");
    }
    json rep = repro_block(inputs);
    if (out.format == "csv") {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", value);
        CsvRow row{std::to_string(k), "", "", "", buf, ""};
        emit(csv_render(rep, {row}));
        return 0;
    }
    json j;
    j["command"] = "density";
    j["value"] = value;
    j["support"] = {{"lower", sup.lower}, {"upper", sup.upper}};
    j["repro"] = rep;
    emit(j.dump(2) + "\n");
    return 0;
}

int cmd_remainder(const std::string& target, int beta, const std::string& delta_s, long k,
                  const std::string& u_s, const std::string& w_s, const std::string& n_list,
                  const OutputOpts& out) {
    Rational delta = delta_s.empty() ? Rational(0) : parse_q(delta_s);
    ScanTarget t = target == "delay" ? ScanTarget::Delay : ScanTarget::Transmission;
    if (target != "delay" && target != "transmission")
        throw DomainError("remainder: unknown target '" + target + "'");
    std::string param_s = t == ScanTarget::Delay ? w_s : u_s;
    if (param_s.empty())
        throw DomainError(std::string("remainder: needs ") +
                          (t == ScanTarget::Delay ? "--w" : "--u"));
    Rational param = parse_q(param_s);
    std::vector<long> ns;
    std::stringstream ss(n_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) ns.push_back(std::stol(tok));
    if (ns.empty()) throw DomainError("remainder: empty --n-list");
    auto rows = remainder_scan(t, beta, delta, k, param, ns);

    json inputs;
    inputs["target"] = target;
    inputs["beta"] = beta;
    inputs["delta"] = delta.to_string();
    inputs["k"] = k;
    inputs[t == ScanTarget::Delay ? "w" : "u"] = param.to_string();
    inputs["n_list"] = n_list;
    json rep = repro_block(inputs);
    if (out.format == "csv") {
        std::vector<CsvRow> csv;
        for (const auto& r : rows) {
            csv.push_back({std::to_string(k), std::to_string(r.n), "", r.remainder.to_string(),
                           decimal_string(r.remainder, out.digits), "remainder"});
            csv.push_back({std::to_string(k), std::to_string(r.n), "",
                           r.scaled_remainder.to_string(),
                           decimal_string(r.scaled_remainder, out.digits), "scaled_remainder"});
        }
        emit(csv_render(rep, csv));
        return 0;
    }
    json j;
    j["command"] = "remainder";
    j["rows"] = json::array();
    for (const auto& r : rows) {
        json e;
        e["n"] = r.n;
        e["remainder"] = r.remainder.to_string();
        e["remainder_decimal"] = decimal_string(r.remainder, out.digits);
        e["scaled_remainder_decimal"] = decimal_string(r.scaled_remainder, out.digits);
        j["rows"].push_back(e);
    }
    j["repro"] = rep;
    emit(j.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chaotic-cavity transport moments and their asymptotics"};
    app.require_subcommand(1);

    OutputOpts out;
    std::string ensemble, target, family, suite = "all", kind;
    std::string a_s, b_s, u_s, v_s, w_s, delta_s, n_list;
    int beta = 2, p = 0, delta_i = 0;
    long k = 1, n = 1, m_opt = -1, order = 32, kmax = 20, samples = 0, mck = 1;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", out.format)->check(CLI::IsMember({"json", "csv"}));
        c->add_option("--digits", out.digits)->check(CLI::Range(1, 70));
    };

    auto* cm = app.add_subcommand("moment", "exact finite-n moment");
    cm->add_option("--ensemble", ensemble)->required()
        ->check(CLI::IsMember({"jacobi", "laguerre", "selberg-like"}));
    cm->add_option("--beta", beta)->required()->check(CLI::IsMember({1, 2, 4}));
    cm->add_option("--delta", delta_i)->check(CLI::IsMember({-1, 0, 1, 2}));
    cm->add_option("--k", k)->required();
    cm->add_option("--n", n)->required();
    cm->add_option("--m", m_opt);
    cm->add_option("--a", a_s);
    cm->add_option("--b", b_s);
    cm->add_option("--u", u_s);
    cm->add_option("--v", v_s);
    cm->add_option("--w", w_s);
    add_common(cm);

    auto* cc = app.add_subcommand("coeff", "asymptotic expansion coefficient");
    cc->add_option("--target", target)->required()
        ->check(CLI::IsMember({"delay", "transmission", "transmission-diff", "selberg-like",
                               "laguerre-positive"}));
    cc->add_option("--beta", beta)->check(CLI::IsMember({1, 2, 4}));
    cc->add_option("--delta", delta_s);
    cc->add_option("--k", k)->required();
    cc->add_option("--p", p)->check(CLI::Range(0, 2));
    cc->add_option("--u", u_s);
    cc->add_option("--v", v_s);
    cc->add_option("--w", w_s);
    add_common(cc);

    auto* cg = app.add_subcommand("genfun", "generating function coefficients");
    cg->add_option("--family", family)->required();
    cg->add_option("--beta", beta)->check(CLI::IsMember({1, 2, 4}));
    cg->add_option("--delta", delta_s);
    cg->add_option("--order", order)->check(CLI::Range(1L, 512L));
    cg->add_option("--u", u_s);
    cg->add_option("--v", v_s);
    cg->add_option("--w", w_s);
    add_common(cg);

    auto* cs = app.add_subcommand("selberg", "Selberg normalization constant");
    cs->add_option("--beta", beta)->required()->check(CLI::IsMember({1, 2, 4}));
    cs->add_option("--a", a_s)->required();
    cs->add_option("--b", b_s)->required();
    cs->add_option("--n", n)->required();
    add_common(cs);

    auto* cv = app.add_subcommand("verify", "run identity suites");
    cv->add_option("--suite", suite)
        ->check(CLI::IsMember({"coker", "chu", "jacobi-poly", "genfun-duality",
                               "appendix-d", "all"}));
    cv->add_option("--kmax", kmax)->check(CLI::Range(1L, 60L));
    add_common(cv);

    auto* cp = app.add_subcommand("sample", "ensemble draw / Monte Carlo moment");
    cp->add_option("--ensemble", ensemble)->required()
        ->check(CLI::IsMember({"jacobi", "laguerre"}));
    cp->add_option("--beta", beta)->required()->check(CLI::IsMember({1, 2, 4}));
    cp->add_option("--n", n)->required();
    cp->add_option("--a", a_s);
    cp->add_option("--b", b_s);
    cp->add_option("--seed", seed);
    cp->add_option("--k", mck);
    cp->add_option("--samples", samples);
    add_common(cp);

    auto* cd = app.add_subcommand("density", "limiting density moments");
    cd->add_option("--kind", kind)->required()
        ->check(CLI::IsMember({"marchenko-pastur", "jacobi-limit"}));
    cd->add_option("--k", k)->required();
    cd->add_option("--u", u_s);
    cd->add_option("--v", v_s);
    cd->add_option("--w", w_s);
    add_common(cd);

    auto* cr = app.add_subcommand("remainder", "empirical asymptotic remainder scan");
    cr->add_option("--target", target)->required()
        ->check(CLI::IsMember({"delay", "transmission"}));
    cr->add_option("--beta", beta)->required()->check(CLI::IsMember({1, 2, 4}));
    cr->add_option("--delta", delta_s);
    cr->add_option("--k", k)->required();
    cr->add_option("--u", u_s);
    cr->add_option("--w", w_s);
    cr->add_option("--n-list", n_list)->required();
    add_common(cr);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cm->parsed())
            return cmd_moment(ensemble, beta, delta_i, k, n, a_s, b_s, u_s, v_s, w_s, m_opt, out);
        if (cc->parsed()) return cmd_coeff(target, beta, delta_s, k, p, u_s, v_s, w_s, out);
        if (cg->parsed()) return cmd_genfun(family, beta, delta_s, order, u_s, v_s, w_s, out);
        if (cs->parsed()) return cmd_selberg(beta, a_s, b_s, n, out);
        if (cv->parsed()) return cmd_verify(suite, kmax, out);
        if (cp->parsed()) return cmd_sample(ensemble, beta, n, a_s, b_s, seed, mck, samples, out);
        if (cd->parsed()) return cmd_density(kind, k, u_s, v_s, w_s, out);
        if (cr->parsed())
            return cmd_remainder(target, beta, delta_s, k, u_s, w_s, n_list, out);
    } catch (const InternalIdentityViolation& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
