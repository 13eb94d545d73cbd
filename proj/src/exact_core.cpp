#include "tt/exact_core.hpp"

#include <sstream>

namespace tt {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail_domain("DivisionByZero", "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool triple_less(const Triple& a, const Triple& b) {
    int c = cmp(a.x(), b.x());
    if (c != 0) return c < 0;
    return a.y() < b.y();
}

Vec3 mediant(const Triple& a, const Triple& b) {
    return {a.q + b.q, a.p + b.p, a.r + b.r};
}

Vec3 mediant(const Vec3& a, const Vec3& b) {
    return {a.q + b.q, a.p + b.p, a.r + b.r};
}

Vec3 mediant_iter(const Triple& y, const Triple& x, unsigned long s) {
    Int m(static_cast<long>(s));
    return {y.q + m * x.q, y.p + m * x.p, y.r + m * x.r};
}

Triple canonicalize(const Vec3& v) {
    Int q = v.q, p = v.p, r = v.r;
    if (q < 0) { q = -q; p = -p; r = -r; }
    if (q == 0) fail_domain("OutOfTriangle", "zero denominator");
    Int g = gcd(gcd(q, p), r);
    q /= g; p /= g; r /= g;
    if (!(q >= p && p >= r && r >= 0))
        fail_domain("OutOfTriangle",
                    "(" + q.get_str() + "," + p.get_str() + "," + r.get_str() +
                        ") violates q >= p >= r >= 0");
    return {q, p, r};
}

Mat3 Mat3::identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = (i == j) ? 1 : 0;
    return m;
}

Mat3 Mat3::from_rows(std::array<std::array<long, 3>, 3> rows) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

Vec3 mat3_vec(const Mat3& a, const Vec3& v) {
    // Int, not auto: a deduced gmp expression template would dangle.
    auto row = [&](int i) -> Int { return a.at(i, 0) * v.q + a.at(i, 1) * v.p + a.at(i, 2) * v.r; };
    return {row(0), row(1), row(2)};
}

Int mat3_det(const Mat3& a) {
    return a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
           a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
           a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
}

Mat3 mat3_pow(const Mat3& a, unsigned long e) {
    Mat3 acc = Mat3::identity();
    Mat3 base = a;
    while (e > 0) {
        if (e & 1) acc = mat3_mul(acc, base);
        base = mat3_mul(base, base);
        e >>= 1;
    }
    return acc;
}

Mat2 Mat2::identity() {
    Mat2 m;
    m.at(0, 0) = 1; m.at(0, 1) = 0;
    m.at(1, 0) = 0; m.at(1, 1) = 1;
    return m;
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
    return c;
}

Int mat2_det(const Mat2& a) {
    return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
}

Rat sq_dist(const Triple& a, const Triple& b) {
    Rat dx = a.x() - b.x();
    Rat dy = a.y() - b.y();
    return dx * dx + dy * dy;
}

std::string format_triple(const Triple& t) {
    return t.p.get_str() + "/" + t.q.get_str() + "," + t.r.get_str() + "/" + t.q.get_str();
}

Int parse_int(const std::string& s) {
    if (s.empty()) fail_parse("BadInteger", "empty integer");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) fail_parse("BadInteger", "'" + s + "'");
    for (; i < s.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(s[i]))) fail_parse("BadInteger", "'" + s + "'");
    // explicit base 10: leading zeros must not trigger octal; gmp rejects '+'
    return Int(s[0] == '+' ? s.substr(1) : s, 10);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) fail_parse("BadRational", "zero denominator in '" + s + "'");
    return make_rat(num, den);
}

Triple parse_triple(const std::string& s, bool reduce) {
    auto comma = s.find(',');
    if (comma == std::string::npos) fail_parse("BadTriple", "expected 'p/q,r/q' in '" + s + "'");
    auto parse_frac_parts = [](const std::string& part) -> std::pair<Int, Int> {
        auto slash = part.find('/');
        if (slash == std::string::npos) return {parse_int(part), Int(1)};
        return {parse_int(part.substr(0, slash)), parse_int(part.substr(slash + 1))};
    };
    auto [p1, q1] = parse_frac_parts(s.substr(0, comma));
    auto [p2, q2] = parse_frac_parts(s.substr(comma + 1));
    if (q1 <= 0 || q2 <= 0) fail_parse("BadTriple", "non-positive denominator in '" + s + "'");
    Int q, p, r;
    if (q1 == q2) {
        q = q1; p = p1; r = p2;
    } else {
        q = q1 * q2; p = p1 * q2; r = p2 * q1;
    }
    Triple t = canonicalize(Vec3{q, p, r});
    if (!reduce && (t.q != q || t.p != p || t.r != r))
        fail_parse("NonCanonicalTriple",
                   "'" + s + "' is not in canonical form (pass --reduce to accept)");
    return t;
}

} // namespace tt
