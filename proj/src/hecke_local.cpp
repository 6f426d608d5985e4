#include "picard/hecke_local.hpp"

#include <stdexcept>

namespace picard {

namespace {

const Rational kHalf(1, 2);

struct LetterData {
    Parabolic parabolic;
    LambdaTag lambda;
    char primary; // alias target ('A' for 'C', 'B' for 'D')
};

LetterData letter_data(char letter) {
    switch (letter) {
        case 'A': return {Parabolic::Pu, LambdaTag::minus_alpha_half, 'A'};
        case 'B': return {Parabolic::Pd, LambdaTag::alpha_half, 'B'};
        case 'C': return {Parabolic::Pu, LambdaTag::minus_alpha_half, 'A'};
        case 'D': return {Parabolic::Pd, LambdaTag::alpha_half, 'B'};
        case 'E': return {Parabolic::Pu, LambdaTag::minus_alpha, 'E'};
        case 'F': return {Parabolic::Pd, LambdaTag::alpha, 'F'};
    }
    throw std::invalid_argument("letter_data: bad letter");
}

// nu_T x-part as listed in the constrained-sum sub-tables: the G rows agree
// with the full-sum values, the H rows carry the opposite sign on the
// nontrivial orbit members (kept verbatim; see the flags ledger).
Rational two_series_nu_t(Side side, const Cocharacter& nu) {
    Rational v = nu_t_x(nu);
    return side == Side::G ? v : -v;
}

int row_ppower(LambdaTag lambda, const Rational& nu_t) {
    Rational e = Rational(2) * (lambda_nu_pairing(lambda, nu_t) + Rational(1));
    if (!e.is_integer()) throw std::logic_error("row_ppower: non-integer PH exponent");
    return (int)e.num();
}

} // namespace

SatakeMonomial satake_eval(const Cocharacter& nu) {
    SatakeMonomial m;
    m.sign = 1;
    m.exps[(int)Gen::T0] = nu.sim;
    for (int i = 0; i < 3; ++i) m.exps[(int)Gen::T1 + i] = nu.gl[i];
    return m;
}

SatakeMonomial satake_eval(const SignedCocharacter& nu) {
    // slots mark sign-carrying factors; exponents are the slot magnitudes
    SatakeMonomial m;
    m.sign = nu.sign;
    m.exps[(int)Gen::T0] = std::abs(nu.z);
    m.exps[(int)Gen::T1] = std::abs(nu.z1);
    m.exps[(int)Gen::T2] = std::abs(nu.z2[0]);
    m.exps[(int)Gen::T3] = std::abs(nu.z2[1]);
    return m;
}

const char* domain_name(SumDomain d) {
    switch (d) {
        case SumDomain::upper: return "upper";
        case SumDomain::lower: return "lower";
        case SumDomain::full: return "full";
        case SumDomain::abs_upper: return "abs-upper";
        case SumDomain::abs_lower: return "abs-lower";
        case SumDomain::abs_full: return "abs-full";
    }
    throw std::invalid_argument("domain_name");
}

const char* level_name(Level l) { return l == Level::pq ? "pq" : "p"; }

std::string RestrictedSum::str() const {
    std::string w;
    bool abs = domain == SumDomain::abs_upper || domain == SumDomain::abs_lower ||
               domain == SumDomain::abs_full;
    std::string wx = (weight == 1 ? "x" : std::to_string(weight) + "x");
    w = abs ? "e^{|" + wx + "|}" : "e^{" + wx + "}";
    std::string dom;
    switch (domain) {
        case SumDomain::upper: dom = "x>" + cut.str() + " j log p"; break;
        case SumDomain::lower: dom = "x<" + cut.str() + " j log p"; break;
        case SumDomain::full: dom = "all x"; break;
        case SumDomain::abs_upper: dom = "x>0"; break;
        case SumDomain::abs_lower: dom = "x<0"; break;
        case SumDomain::abs_full: dom = "x!=0"; break;
    }
    return "sum[" + dom + "] " + w + " " + rep;
}

std::string CaseId::str() const {
    std::string s = side == Side::H ? "H-" : "";
    s += letter;
    if (series == 1) return s + "1";
    return s + "2." + std::to_string(row);
}

std::optional<CaseId> parse_case_id(const std::string& s) {
    std::string body = s;
    CaseId id;
    if (body.rfind("H-", 0) == 0) {
        id.side = Side::H;
        body = body.substr(2);
    }
    if (body.empty() || body[0] < 'A' || body[0] > 'F') return std::nullopt;
    id.letter = body[0];
    body = body.substr(1);
    if (body == "1") {
        id.series = 1;
        id.row = 0;
        return id;
    }
    if (body.size() == 3 && body[0] == '2' && body[1] == '.' && body[2] >= '1' && body[2] <= '3') {
        id.series = 2;
        id.row = body[2] - '0';
        return id;
    }
    return std::nullopt;
}

std::vector<CaseId> all_case_ids() {
    std::vector<CaseId> out;
    for (Side side : {Side::G, Side::H})
        for (char c = 'A'; c <= 'F'; ++c) {
            out.push_back({side, c, 1, 0});
            for (int r = 1; r <= 3; ++r) out.push_back({side, c, 2, r});
        }
    return out;
}

std::string kernel_tag(Side side) {
    return side == Side::G ? "phi_{q,T}(pi_q,X_q)" : "varphi_{q,T}(pi_q,X_q)";
}

std::vector<CaseRow> one_series_lines(const CaseId& id) {
    if (id.series != 1) throw std::invalid_argument("one_series_lines: not a 1-series label");
    LetterData ld = letter_data(id.letter);
    CaseId primary{id.side, ld.primary, 1, 0};
    std::vector<CaseRow> out;
    int line = 1;
    for (const Cocharacter& nu : weyl_orbit(mu())) {
        CaseRow r;
        r.id = id;
        r.id.row = line;
        r.alias_of = primary;
        r.alias_of.row = line;
        r.parabolic = ld.parabolic;
        r.lambda = ld.lambda;
        r.nu = nu;
        r.nu_t = nu_t_x(nu); // full sums use the display dot products on both sides
        r.transcribed_cut = r.nu_t;
        r.weight = lambda_weight(ld.lambda);
        r.direction = ld.parabolic == Parabolic::Pu ? SumDomain::upper : SumDomain::lower;
        r.ppower = row_ppower(ld.lambda, r.nu_t);
        r.monomial =
            id.side == Side::G ? satake_eval(nu) : satake_eval(transfer_cochar(nu));
        ++line;
    }
    return out;
}

CaseRow case_row(const CaseId& id) {
    LetterData ld = letter_data(id.letter);
    if (id.series == 1) {
        CaseRow lead = one_series_lines(id)[0];
        lead.id = id;
        lead.id.row = 0;
        lead.alias_of = CaseId{id.side, ld.primary, 1, 0};
        return lead;
    }
    auto orbit = weyl_orbit(mu());
    if (id.row < 1 || id.row > 3) throw std::invalid_argument("case_row: bad row");
    const Cocharacter& nu = orbit[id.row - 1];

    CaseRow r;
    r.id = id;
    r.alias_of = CaseId{id.side, ld.primary, 2, id.row};
    r.parabolic = ld.parabolic;
    r.lambda = ld.lambda;
    r.nu = nu;
    r.nu_t = two_series_nu_t(id.side, nu);
    r.transcribed_cut = r.nu_t;
    // the one constrained-sum label whose printed cut disagrees with its own
    // nu_T listing; kept verbatim and reported as a flag
    if (id.side == Side::H && id.letter == 'B' && id.row == 2) r.transcribed_cut = -kHalf;
    r.weight = lambda_weight(ld.lambda);
    r.direction = ld.parabolic == Parabolic::Pu ? SumDomain::upper : SumDomain::lower;
    r.ppower = row_ppower(ld.lambda, r.nu_t);
    r.monomial = id.side == Side::G ? satake_eval(nu) : satake_eval(transfer_cochar(nu));
    return r;
}

std::vector<CaseRow> case_table() {
    std::vector<CaseRow> out;
    for (Side side : {Side::G, Side::H}) {
        for (char c : {'A', 'B', 'C', 'D', 'E', 'F'}) out.push_back(case_row({side, c, 1, 0}));
        for (char c : {'A', 'B', 'E', 'F'})
            for (int row = 1; row <= 3; ++row) out.push_back(case_row({side, c, 2, row}));
    }
    return out;
}

LaurentPoly full_sum(const CaseId& id) {
    if (id.series != 1) throw std::invalid_argument("full_sum: " + id.str() + " is not a full sum");
    LaurentPoly sum;
    for (const CaseRow& line : one_series_lines(id))
        sum += LaurentPoly::gen(Gen::PH, line.ppower) * line.monomial.poly();
    return sum;
}

RestrictedCase restricted_sum(const CaseId& id) {
    if (id.series != 2)
        throw std::invalid_argument("restricted_sum: " + id.str() + " is not a constrained sum");
    CaseRow r = case_row(id);
    RestrictedSum rs;
    rs.weight = r.weight;
    rs.domain = r.direction;
    rs.cut = r.transcribed_cut;
    rs.level = Level::pq;
    rs.rep = kernel_tag(id.side);
    return {r.monomial, r.ppower, rs};
}

} // namespace picard
