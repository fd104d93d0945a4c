#pragma once

// Exact coefficient fields: Q backed by GMP rationals (always in lowest terms
// with positive denominator) and prime fields GF(p) with word-sized p.
// Algorithms take a field context object F and work with F::Elem values, so
// the same templated code runs over either field.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "apolar/util.hpp"

namespace apolar {

struct RationalField {
    using Elem = mpq_class;

    static Elem zero() { return Elem(0); }
    static Elem one() { return Elem(1); }
    static Elem from_int(long long v) {
        Elem e;
        e = static_cast<long>(v);
        return e;
    }
    static bool is_zero(const Elem& a) { return sgn(a) == 0; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem div(const Elem& a, const Elem& b) { return a / b; }
    static Elem inv(const Elem& a) { return Elem(1) / a; }
    static std::string to_string(const Elem& a) { return a.get_str(); }
    static std::string name() { return "qq"; }
};

// The modulus is process-global: polynomial and relation containers perform
// coefficient arithmetic through static F:: calls, so exactly one prime
// modulus is active at a time.  Constructing a PrimeField installs its
// modulus; finish (or discard) values of one field before switching primes.
struct PrimeField {
    using Elem = std::uint32_t;  // value in [0, p)

    std::uint32_t p;

    explicit PrimeField(std::uint32_t modulus) : p(modulus) {
        if (p < 2 || !is_prime(p)) {
            throw UsageError("field modulus must be prime, got " + std::to_string(p));
        }
        active_p = p;
    }

    static bool is_prime(std::uint32_t v) {
        if (v < 2) return false;
        for (std::uint64_t d = 2; d * d <= v; ++d) {
            if (v % d == 0) return false;
        }
        return true;
    }

    static Elem zero() { return 0; }
    static Elem one() { return 1 % active_p; }
    static Elem from_int(long long v) {
        long long r = v % static_cast<long long>(active_p);
        if (r < 0) r += active_p;
        return static_cast<Elem>(r);
    }
    static bool is_zero(const Elem& a) { return a == 0; }
    static Elem add(Elem a, Elem b) {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<Elem>(s >= active_p ? s - active_p : s);
    }
    static Elem sub(Elem a, Elem b) { return a >= b ? a - b : a + active_p - b; }
    static Elem mul(Elem a, Elem b) {
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % active_p);
    }
    static Elem neg(Elem a) { return a == 0 ? 0 : active_p - a; }
    static Elem inv(Elem a) {
        if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1, r = active_p, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += active_p;
        return static_cast<Elem>(t);
    }
    static Elem div(Elem a, Elem b) { return mul(a, inv(b)); }
    static std::string to_string(const Elem& a) { return std::to_string(a); }
    std::string name() const { return "gf" + std::to_string(p); }

  private:
    static inline std::uint32_t active_p = 32003;
};

enum class FieldKind { rational, prime };

// Runtime field descriptor used by the CLI and serializers.
struct FieldSpec {
    FieldKind kind = FieldKind::prime;
    std::uint32_t p = 32003;

    static FieldSpec rational() { return {FieldKind::rational, 0}; }
    static FieldSpec gf(std::uint32_t p) { return {FieldKind::prime, p}; }

    // Accepts "qq", "QQ", "gf:32003", "gf32003".
    static FieldSpec parse(const std::string& s) {
        if (s == "qq" || s == "QQ" || s == "Q") return rational();
        std::string body;
        if (s.rfind("gf:", 0) == 0) {
            body = s.substr(3);
        } else if (s.rfind("gf", 0) == 0) {
            body = s.substr(2);
        } else {
            throw UsageError("unknown field '" + s + "' (expected qq or gf:<p>)");
        }
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("bad prime in field spec '" + s + "'");
        }
        unsigned long v = std::stoul(body);
        if (v < 2 || v > 0x7fffffffUL || !PrimeField::is_prime(static_cast<std::uint32_t>(v))) {
            throw UsageError("field modulus must be a prime < 2^31, got " + body);
        }
        return gf(static_cast<std::uint32_t>(v));
    }

    std::string name() const {
        return kind == FieldKind::rational ? "qq" : "gf" + std::to_string(p);
    }

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && (kind == FieldKind::rational || p == o.p);
    }
};

// Dispatches fn over the concrete field type named by the descriptor.
template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldKind::rational) {
        return fn(RationalField{});
    }
    return fn(PrimeField{spec.p});
}

}  // namespace apolar
