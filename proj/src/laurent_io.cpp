#include "picard/laurent_io.hpp"

#include <sstream>

#include <json.hpp>

namespace picard {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string latex_ppower(int k) {
    // PH^k = p^{kj/2}
    if (k == 0) return "";
    if (k % 2 == 0) {
        int half = k / 2;
        if (half == 1) return "p^{j}";
        return "p^{" + std::to_string(half) + "j}";
    }
    if (k == 1) return "p^{j/2}";
    if (k == -1) return "p^{-j/2}";
    return "p^{" + std::to_string(k) + "j/2}";
}

std::string latex_satake(const ExpVec& e) {
    static const std::array<const char*, 4> names = {"t", "t_1", "t_2", "t_3"};
    std::string inner;
    int count = 0;
    for (int i = 0; i < 4; ++i) {
        int k = e[(int)Gen::T0 + i];
        if (k == 0) continue;
        if (k != 1)
            throw std::domain_error("latex: Satake exponents other than 0/1 have no display form");
        if (!inner.empty()) inner += "\\,";
        inner += names[i];
        ++count;
    }
    if (count == 0) return "";
    if (count == 1) return inner + "^j";
    return "(" + inner + ")^j";
}

std::string latex_exp_of(const char* sym, int k) {
    // e^{k sym}
    if (k == 0) return "";
    std::string ks = k == 1 ? "" : (k == -1 ? "-" : std::to_string(k));
    return std::string("e^{") + ks + sym + "}";
}

std::string latex_term_body(const ExpVec& e) {
    std::string s;
    s += latex_ppower(e[(int)Gen::PH]);
    s += latex_satake(e);
    s += latex_exp_of("x", e[(int)Gen::EX]);
    s += latex_exp_of("i\\theta", e[(int)Gen::U]);
    if (int k = e[(int)Gen::MINV]; k != 0) {
        // MINV^k = mu(gamma)^{-k}
        if (k == -1)
            s += "\\mu(\\gamma)";
        else
            s += "\\mu(\\gamma)^{" + std::to_string(-k) + "}";
    }
    return s;
}

} // namespace

std::string emit_json(const LaurentPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        ordered_json t;
        t["coeff"] = c.str();
        ordered_json exps;
        for (int i = 0; i < kGenCount; ++i)
            if (e[i] != 0) exps[kGenNames[i]] = e[i];
        t["exps"] = std::move(exps);
        terms.push_back(std::move(t));
    }
    ordered_json j;
    j["terms"] = std::move(terms);
    return j.dump();
}

std::string emit_latex(const LaurentPoly& p) {
    if (p.is_zero()) return "0";

    // Factor a common coefficient magnitude when all terms share one != 1.
    Rational common = p.terms().begin()->second.abs();
    bool factor = p.size() >= 2 && common != Rational(1);
    for (const auto& [e, c] : p.terms())
        if (c.abs() != common) { factor = false; break; }

    std::string out;
    if (factor) out += common.str() + "(";
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational shown = factor ? c / common : c;
        std::string body = latex_term_body(e);
        std::string mag;
        Rational a = shown.abs();
        if (a != Rational(1) || body.empty()) mag = a.str();
        if (first) {
            if (shown.sign() < 0) out += "-";
            first = false;
        } else {
            out += shown.sign() < 0 ? "-" : "+";
        }
        out += mag + body;
    }
    if (factor) out += ")";
    return out;
}

std::string emit(const LaurentPoly& p, const std::string& format) {
    if (format == "json") return emit_json(p);
    if (format == "latex") return emit_latex(p);
    throw std::invalid_argument("emit: unknown format '" + format + "'");
}

LaurentPoly parse_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    LaurentPoly p;
    for (const auto& t : j.at("terms")) {
        Rational c = Rational::parse(t.at("coeff").get<std::string>());
        ExpVec e = kZeroExp;
        for (const auto& [key, val] : t.at("exps").items()) {
            bool known = false;
            for (int i = 0; i < kGenCount; ++i)
                if (key == kGenNames[i]) {
                    e[i] = val.get<int>();
                    known = true;
                    break;
                }
            if (!known) throw std::invalid_argument("parse_json: unknown generator " + key);
        }
        p += LaurentPoly::monomial(c, e);
    }
    return p;
}

} // namespace picard
