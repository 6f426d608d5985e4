#include "picard/term_sum.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

#include "picard/laurent_io.hpp"

namespace picard {

namespace {

using ordered_json = nlohmann::ordered_json;

int domain_rank(SumDomain d) { return (int)d; }

std::tuple<int, int, int, int, int, int, int> symbol_key(const SpectralSymbol& s) {
    auto fam = std::pair<int, int>(s.family.u_exp == 0 ? 1 : 0, -s.family.u_exp);
    return {fam.first,
            fam.second,
            s.family.mu_inv ? 1 : 0,
            (int)s.kind,
            s.kind == SpectralSymbol::Kind::IndP ? (int)s.parabolic : -1,
            (int)s.level,
            (int)s.lambda};
}

ExpVec leading_exp(const LaurentPoly& p) {
    if (p.is_zero()) return kZeroExp;
    return p.terms().begin()->first;
}

std::tuple<int, int, std::string> rsum_key(const std::optional<RestrictedSum>& r) {
    if (!r) return {-1, 0, ""};
    return {domain_rank(r->domain), -r->weight, r->cut.str()};
}

bool term_less(const TermSum::Term& a, const TermSum::Term& b) {
    auto ka = symbol_key(a.symbol), kb = symbol_key(b.symbol);
    if (ka != kb) return ka < kb;
    ExpVec la = leading_exp(a.coeff), lb = leading_exp(b.coeff);
    if (!(la == lb)) return TermOrder{}(la, lb);
    auto ra = rsum_key(a.rsum), rb = rsum_key(b.rsum);
    return ra < rb;
}

bool mergeable(const TermSum::Term& a, const TermSum::Term& b) {
    return a.symbol == b.symbol && a.rsum == b.rsum;
}

ordered_json symbol_json(const SpectralSymbol& s) {
    ordered_json j;
    j["kind"] = s.kind == SpectralSymbol::Kind::IndT ? "IndT" : "IndP";
    if (s.kind == SpectralSymbol::Kind::IndP) j["parabolic"] = parabolic_name(s.parabolic);
    j["lambda"] = lambda_name(s.lambda);
    j["level"] = level_name(s.level);
    j["family"] = {{"u", s.family.u_exp}, {"mu_inv", s.family.mu_inv}};
    j["side"] = s.side == Side::G ? "G" : "H";
    return j;
}

SpectralSymbol symbol_from_json(const ordered_json& j) {
    SpectralSymbol s;
    s.kind = j.at("kind") == "IndT" ? SpectralSymbol::Kind::IndT : SpectralSymbol::Kind::IndP;
    if (s.kind == SpectralSymbol::Kind::IndP)
        s.parabolic = j.at("parabolic") == "Pu" ? Parabolic::Pu : Parabolic::Pd;
    std::string lam = j.at("lambda");
    bool found = false;
    for (LambdaTag t : kAllLambda)
        if (lam == lambda_name(t)) {
            s.lambda = t;
            found = true;
        }
    if (!found) throw std::invalid_argument("symbol_from_json: bad lambda " + lam);
    s.level = j.at("level") == "pq" ? Level::pq : Level::p;
    s.family.u_exp = j.at("family").at("u").get<int>();
    s.family.mu_inv = j.at("family").at("mu_inv").get<bool>();
    s.side = j.at("side") == "G" ? Side::G : Side::H;
    return s;
}

ordered_json rsum_json(const RestrictedSum& r) {
    ordered_json j;
    j["weight"] = r.weight;
    j["domain"] = domain_name(r.domain);
    j["cut"] = r.cut.str();
    j["level"] = level_name(r.level);
    j["rep"] = r.rep;
    return j;
}

RestrictedSum rsum_from_json(const ordered_json& j) {
    RestrictedSum r;
    r.weight = j.at("weight").get<int>();
    std::string dom = j.at("domain");
    bool found = false;
    for (SumDomain d : {SumDomain::upper, SumDomain::lower, SumDomain::full, SumDomain::abs_upper,
                        SumDomain::abs_lower, SumDomain::abs_full})
        if (dom == domain_name(d)) {
            r.domain = d;
            found = true;
        }
    if (!found) throw std::invalid_argument("rsum_from_json: bad domain " + dom);
    r.cut = Rational::parse(j.at("cut").get<std::string>());
    r.level = j.at("level") == "pq" ? Level::pq : Level::p;
    r.rep = j.at("rep").get<std::string>();
    return r;
}

} // namespace

bool SpectralSymbol::operator==(const SpectralSymbol& o) const {
    if (kind != o.kind || lambda != o.lambda || level != o.level || side != o.side)
        return false;
    if (!(family == o.family)) return false;
    if (kind == Kind::IndP && parabolic != o.parabolic) return false;
    return true;
}

std::string SpectralSymbol::str() const {
    std::string s = kind == Kind::IndT ? "tr I_T" : (std::string("tr i_") + parabolic_name(parabolic));
    s += "(pi";
    s += level == Level::pq ? "^{p,q}" : "^{p}";
    s += std::string("_{Lambda=") + lambda_name(lambda) + "}";
    s += ", family=" + family.str();
    s += side == Side::G ? ", G)" : ", H)";
    return s;
}

bool symbol_less(const SpectralSymbol& a, const SpectralSymbol& b) {
    return symbol_key(a) < symbol_key(b);
}

SpectralSymbol associate(const SpectralSymbol& s) {
    if (s.kind != SpectralSymbol::Kind::IndP)
        throw std::invalid_argument("associate: only parabolic symbols pair");
    SpectralSymbol t = s;
    t.parabolic = s.parabolic == Parabolic::Pu ? Parabolic::Pd : Parabolic::Pu;
    t.lambda = lambda_mirror(s.lambda);
    return t;
}

void TermSum::add(Term t) {
    if (t.coeff.is_zero()) return;
    for (auto& u : terms)
        if (mergeable(u, t)) {
            u.coeff += t.coeff;
            normalize();
            return;
        }
    terms.push_back(std::move(t));
    normalize();
}

void TermSum::add(const TermSum& o) {
    for (const auto& t : o.terms) add(t);
}

TermSum TermSum::scale(const Rational& c) const {
    TermSum r;
    for (const auto& t : terms) r.add({t.coeff.scale(c), t.symbol, t.rsum});
    return r;
}

void TermSum::normalize() {
    std::erase_if(terms, [](const Term& t) { return t.coeff.is_zero(); });
    std::sort(terms.begin(), terms.end(), term_less);
}

bool TermSum::has_restricted_terms() const {
    return std::any_of(terms.begin(), terms.end(),
                       [](const Term& t) { return t.rsum.has_value(); });
}

bool TermSum::operator==(const TermSum& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!(terms[i].coeff == o.terms[i].coeff)) return false;
        if (!(terms[i].symbol == o.terms[i].symbol)) return false;
        if (terms[i].rsum != o.terms[i].rsum) return false;
    }
    return true;
}

std::string TermSum::to_json() const {
    ordered_json arr = ordered_json::array();
    for (const auto& t : terms) {
        ordered_json jt;
        jt["coeff"] = ordered_json::parse(emit_json(t.coeff));
        jt["symbol"] = symbol_json(t.symbol);
        jt["rsum"] = t.rsum ? rsum_json(*t.rsum) : ordered_json(nullptr);
        arr.push_back(std::move(jt));
    }
    ordered_json j;
    j["terms"] = std::move(arr);
    return j.dump();
}

std::string TermSum::to_text() const {
    if (terms.empty()) return "0\n";
    std::string out;
    for (const auto& t : terms) {
        out += "[" + emit_latex(t.coeff) + "] " + t.symbol.str();
        if (t.rsum) out += "  " + t.rsum->str();
        out += "\n";
    }
    return out;
}

TermSum TermSum::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    TermSum ts;
    for (const auto& jt : j.at("terms")) {
        Term t;
        t.coeff = parse_json(jt.at("coeff").dump());
        t.symbol = symbol_from_json(jt.at("symbol"));
        if (!jt.at("rsum").is_null()) t.rsum = rsum_from_json(jt.at("rsum"));
        ts.add(std::move(t));
    }
    return ts;
}

std::string rsum_to_json_string(const RestrictedSum& r) { return rsum_json(r).dump(); }

} // namespace picard
