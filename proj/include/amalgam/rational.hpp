#pragma once

// Exact rational arithmetic. Everything that touches predimension values or
// cell geometry goes through these types; floating point is never used there.

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace amalgam {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "p", "-p", "p/q" with optional sign on p; q > 0 after normalization.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw structural_error("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw structural_error("cannot parse rational '" + s + "': " + e.what());
    }
}

inline std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Predimension coefficient; the paper's range restriction is enforced here.
struct Alpha {
    Rational value;

    explicit Alpha(const Rational& v) : value(v) {
        if (v < 0 || v > 1) throw contract_error("alpha must lie in [0,1], got " + format_rational(v));
    }
    static Alpha parse(const std::string& s) { return Alpha(parse_rational(s)); }

    // int64 fast path for the subset-enumeration inner loops.
    bool fits_int64() const {
        static const BigInt bound = BigInt(1) << 40;
        return numerator(value) < bound && denominator(value) < bound;
    }
    long long num() const { return static_cast<long long>(numerator(value)); }
    long long den() const { return static_cast<long long>(denominator(value)); }
};

}  // namespace amalgam
