#include "cubicrank/scalar.hpp"

#include <cctype>
#include <utility>

namespace cubicrank {

namespace {

// Trial-division bounds for squarefree certification.  After removing every
// factor below kTrialBound, a cofactor below kTrialBound^2 has at most one
// prime factor and is therefore certified squarefree.
constexpr long kTrialSmall = 1000;
constexpr long kTrialBound = 100000;

std::string int_str(const Int& n) { return n.str(); }

} // namespace

FieldMismatch::FieldMismatch(const Int& d1, const Int& d2)
    : std::runtime_error("cannot mix sqrt(" + int_str(d1) + ") with sqrt(" +
                         int_str(d2) + ") in one computation") {}

NotCertifiedSquarefree::NotCertifiedSquarefree(const Int& cofactor)
    : std::runtime_error("cannot certify squarefree part: cofactor " +
                         int_str(cofactor) + " exceeds the trial-division bound") {}

InvalidRadicand::InvalidRadicand(const std::string& what)
    : std::runtime_error("invalid radicand: " + what) {}

ScalarFormatError::ScalarFormatError(const std::string& input)
    : std::runtime_error("cannot parse scalar \"" + input + "\"") {}

std::optional<Int> exact_isqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n); // floor square root
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rational> exact_rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto num = exact_isqrt(boost::multiprecision::numerator(r));
    if (!num) return std::nullopt;
    auto den = exact_isqrt(boost::multiprecision::denominator(r));
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

namespace {

// Remove all factors k in [from, to) from n, accumulating sqrt factors.
void strip_range(Int& n, Int& root, Int& sqfree, long from, long to) {
    for (long k = from; k < to; ++k) {
        if (n % k != 0) continue;
        int e = 0;
        while (n % k == 0) { n /= k; ++e; }
        for (int i = 0; i < e / 2; ++i) root *= k;
        if (e % 2) sqfree *= k;
        if (n == 1) return;
    }
}

// True when the cofactor (all prime factors >= bound) is certified squarefree.
bool certified_by_bound(const Int& cofactor, long bound) {
    return cofactor < Int(bound) * bound;
}

} // namespace

SquarefreeParts squarefree_decompose(Int n) {
    if (n <= 0) throw InvalidRadicand("squarefree decomposition needs n > 0, got " + n.str());
    Int root = 1, sqfree = 1;
    strip_range(n, root, sqfree, 2, kTrialSmall);
    if (n != 1) {
        // A cofactor that is a perfect square has only even exponents left,
        // so it folds entirely into the square part.
        if (auto r = exact_isqrt(n)) {
            root *= *r;
            n = 1;
        } else if (!certified_by_bound(n, kTrialSmall)) {
            strip_range(n, root, sqfree, kTrialSmall, kTrialBound);
            if (n != 1) {
                if (auto r2 = exact_isqrt(n)) {
                    root *= *r2;
                    n = 1;
                } else if (!certified_by_bound(n, kTrialBound)) {
                    throw NotCertifiedSquarefree(n);
                }
            }
        }
    }
    sqfree *= n; // remaining cofactor, certified squarefree (or 1)
    return {root, sqfree};
}

Scalar::Scalar(Rational a, Rational b, Int d, unchecked_tag)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (b_ == 0) d_ = 0;
}

Scalar::Scalar(const Rational& a, const Rational& b, const Int& d) : a_(a), b_(b), d_(d) {
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    if (d_ <= 1) throw InvalidRadicand("tower tag must be > 1, got " + d_.str());
    SquarefreeParts p = squarefree_decompose(d_);
    if (p.squarefree != d_)
        throw InvalidRadicand(d_.str() + " is not squarefree");
}

Scalar Scalar::sqrt_of(const Rational& r) {
    if (r < 0) throw InvalidRadicand("negative radicand " + to_string(r));
    if (r == 0) return Scalar();
    // sqrt(p/q) = sqrt(p*q)/q with integer radicand p*q.
    Int p = boost::multiprecision::numerator(r);
    Int q = boost::multiprecision::denominator(r);
    SquarefreeParts parts = squarefree_decompose(p * q);
    Rational coeff(parts.square_root, q);
    if (parts.squarefree == 1) return Scalar(coeff);
    return Scalar(Rational(0), coeff, parts.squarefree, unchecked_tag{});
}

int Scalar::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(d) decided by a^2 vs d*b^2 (never equal
    // for squarefree d > 1 and b != 0).
    Rational lhs = a_ * a_;
    Rational rhs = Rational(d_) * b_ * b_;
    return lhs > rhs ? sa : sb;
}

Rational Scalar::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

const Int& Scalar::merge_tag(const Scalar& l, const Scalar& r) {
    if (l.d_ == 0) return r.d_;
    if (r.d_ == 0 || l.d_ == r.d_) return l.d_;
    throw FieldMismatch(l.d_, r.d_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    Int d = merge_tag(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = b_ == 0 ? Int(0) : d;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    Int d = merge_tag(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    d_ = b_ == 0 ? Int(0) : d;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Int d = merge_tag(*this, o);
    Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = b_ == 0 ? Int(0) : d;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (d_ == 0) return Scalar(Rational(1) / a_);
    // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - d b^2).
    Rational n = norm();
    return Scalar(a_ / n, -b_ / n, d_, unchecked_tag{});
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::optional<Scalar> Scalar::sqrt_in_field() const {
    if (sign() < 0) return std::nullopt;
    if (d_ == 0) {
        if (auto r = exact_rational_sqrt(a_)) return Scalar(*r);
        return std::nullopt;
    }
    // Normalization guarantees b_ != 0 here.
    // (e + f sqrt d)^2 = a + b sqrt d requires e^2 + d f^2 = a, 2ef = b;
    // eliminating f: e^2 = (a ± sqrt(a^2 - d b^2))/2, so the norm must be a
    // rational square first.
    auto n = exact_rational_sqrt(norm());
    if (!n) return std::nullopt;
    for (const Rational& r : {Rational(*n), Rational(-*n)}) {
        Rational e2 = (a_ + r) / 2;
        if (auto e = exact_rational_sqrt(e2)) {
            if (*e == 0) continue;
            Rational f = b_ / (2 * *e);
            Scalar cand(*e, f, d_, unchecked_tag{});
            if (cand * cand == *this) return cand.sign() >= 0 ? cand : -cand;
        }
    }
    return std::nullopt;
}

std::optional<Scalar> sqrt_in_tower(const Scalar& s, const Int& ambient_d) {
    if (s.tower() != 0 && ambient_d != s.tower())
        throw FieldMismatch(s.tower(), ambient_d);
    if (s.is_rational() && ambient_d != 0) {
        if (s.sign() < 0) return std::nullopt;
        if (auto r = exact_rational_sqrt(s.rat())) return Scalar(*r);
        // d times a rational square: the root is f*sqrt(ambient_d).
        if (auto f = exact_rational_sqrt(s.rat() / Rational(ambient_d)))
            return Scalar(Rational(0), *f, ambient_d);
        return std::nullopt;
    }
    return s.sqrt_in_field();
}

std::string to_string(const Rational& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

// |b|*sqrt(d) with b != 0, no leading sign.
std::string radical_str(const Rational& b, const Int& d) {
    Rational mag = b < 0 ? Rational(-b) : b;
    std::string root = "sqrt(" + d.str() + ")";
    if (mag == 1) return root;
    return to_string(mag) + "*" + root;
}

} // namespace

std::string to_string(const Scalar& s) {
    if (s.is_rational()) return to_string(s.rat());
    std::string out;
    if (s.rat() != 0) {
        out = to_string(s.rat());
        out += s.rad() > 0 ? "+" : "-";
    } else if (s.rad() < 0) {
        out = "-";
    }
    out += radical_str(s.rad(), s.tower());
    return out;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// "p" or "p/q", optional leading '-', q positive.  `whole` is the original
// input, quoted in error messages.
Rational checked_rational(std::string t, const std::string& whole) {
    bool neg = false;
    if (!t.empty() && t[0] == '-') {
        neg = true;
        t.erase(0, 1);
    }
    std::string num = t, den = "1";
    if (auto slash = t.find('/'); slash != std::string::npos) {
        num = t.substr(0, slash);
        den = t.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den) || Int(den) == 0)
        throw ScalarFormatError(whole);
    Rational r = Rational(Int(num)) / Rational(Int(den));
    return neg ? Rational(-r) : r;
}

} // namespace

Rational rational_from_string(const std::string& s) { return checked_rational(s, s); }

Scalar scalar_from_string(const std::string& s) {
    std::size_t k = s.find("sqrt(");
    if (k == std::string::npos) return Scalar(rational_from_string(s));

    // The radical closes the string: "sqrt(d)" with d a positive integer.
    if (s.back() != ')' || k + 5 >= s.size() - 1) throw ScalarFormatError(s);
    std::string dstr = s.substr(k + 5, s.size() - 1 - (k + 5));
    if (!all_digits(dstr)) throw ScalarFormatError(s);
    Int d(dstr);

    // What precedes the radical: "", "-", "m*", "-m*", "a+", "a-",
    // "a+m*", or "a-m*".
    std::string head = s.substr(0, k);
    if (head.empty()) return Scalar(Rational(0), Rational(1), d);
    if (head == "-") return Scalar(Rational(0), Rational(-1), d);

    if (head.back() == '*') {
        head.pop_back();
        // Split off the rational summand, if any: the separating sign is the
        // last '+'/'-' preceded by a digit (a leading '-' belongs to the
        // magnitude itself, and the magnitude is unsigned after a split).
        for (std::size_t j = head.size(); j-- > 1;) {
            if ((head[j] != '+' && head[j] != '-') || !std::isdigit(static_cast<unsigned char>(head[j - 1])))
                continue;
            Rational a = checked_rational(head.substr(0, j), s);
            std::string mag = head.substr(j + 1);
            if (mag.empty() || !std::isdigit(static_cast<unsigned char>(mag[0])))
                throw ScalarFormatError(s);
            Rational b = checked_rational(mag, s);
            return Scalar(a, head[j] == '-' ? Rational(-b) : b, d);
        }
        return Scalar(Rational(0), checked_rational(head, s), d);
    }

    if (head.back() == '+' || head.back() == '-') {
        Rational b(head.back() == '-' ? -1 : 1);
        head.pop_back();
        return Scalar(checked_rational(head, s), b, d);
    }
    throw ScalarFormatError(s);
}

} // namespace cubicrank
