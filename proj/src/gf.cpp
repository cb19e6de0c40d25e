#include "gf.hpp"

#include <algorithm>
#include <array>

namespace dcconv {
namespace {

constexpr std::uint32_t kMaxQ = 1u << 16;

bool is_prime(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Built-in irreducible (in fact primitive) polynomials x^e + ... for p = 2,
// encoded as coefficient bitmasks, index = degree.
constexpr std::array<std::uint32_t, 17> kBinaryModuli = {
    0, 0,
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x89,     // x^7 + x^3 + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

// Dense polynomial arithmetic over F_p, coefficients low to high.  Used only
// during construction, before tables exist.
using PPoly = std::vector<std::uint32_t>;

int pdeg(const PPoly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

std::uint32_t mod_inverse(std::uint32_t c, std::uint32_t p) {
    // p prime, 0 < c < p
    std::uint32_t r = 1;
    std::uint32_t b = c;
    std::uint32_t expo = p - 2;
    while (expo) {
        if (expo & 1) r = static_cast<std::uint64_t>(r) * b % p;
        b = static_cast<std::uint64_t>(b) * b % p;
        expo >>= 1;
    }
    return p == 2 ? c : r;
}

// remainder of a modulo monic divisor
PPoly pmod(PPoly a, const PPoly& monic, std::uint32_t p) {
    int dm = pdeg(monic);
    for (int i = pdeg(a); i >= dm && dm >= 0; --i) {
        std::uint32_t c = a[i];
        if (!c) continue;
        for (int j = 0; j <= dm; ++j) {
            std::uint64_t sub = static_cast<std::uint64_t>(c) * monic[j] % p;
            a[i - dm + j] = (a[i - dm + j] + p - sub) % p;
        }
    }
    if (dm >= 0) a.resize(dm ? dm : 1);
    return a;
}

bool is_irreducible(const PPoly& monic, std::uint32_t p, std::uint32_t e) {
    // trial division by every monic polynomial of degree 1..e/2
    for (std::uint32_t d = 1; 2 * d <= e; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PPoly cand(d + 1, 0);
            std::uint64_t v = idx;
            for (std::uint32_t i = 0; i < d; ++i) {
                cand[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            cand[d] = 1;
            if (pdeg(pmod(monic, cand, p)) < 0) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

Symbol Field::raw_add(Symbol a, Symbol b) const {
    if (e_ == 1) return static_cast<Symbol>((static_cast<std::uint32_t>(a) + b) % p_);
    if (p_ == 2) return a ^ b;
    std::uint32_t out = 0, mult = 1, x = a, y = b;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += (x % p_ + y % p_) % p_ * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return static_cast<Symbol>(out);
}

Symbol Field::raw_neg(Symbol a) const {
    if (e_ == 1) return static_cast<Symbol>((p_ - a) % p_);
    if (p_ == 2) return a;
    std::uint32_t out = 0, mult = 1, x = a;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += (p_ - x % p_) % p_ * mult;
        x /= p_;
        mult *= p_;
    }
    return static_cast<Symbol>(out);
}

Symbol Field::raw_mul(Symbol a, Symbol b) const {
    if (e_ == 1) return static_cast<Symbol>(static_cast<std::uint64_t>(a) * b % p_);
    std::array<std::uint32_t, 32> prod{};
    std::uint32_t da[16], db[16];
    std::uint32_t x = a, y = b;
    for (std::uint32_t i = 0; i < e_; ++i) {
        da[i] = x % p_;
        db[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (!da[i]) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    // reduce by the monic modulus
    for (int i = 2 * static_cast<int>(e_) - 2; i >= static_cast<int>(e_); --i) {
        std::uint32_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < e_; ++j) {
            std::uint32_t sub = c * modulus_[j] % p_;
            prod[i - e_ + j] = (prod[i - e_ + j] + p_ - sub) % p_;
        }
    }
    std::uint32_t out = 0;
    for (int i = static_cast<int>(e_) - 1; i >= 0; --i) out = out * p_ + prod[i];
    return static_cast<Symbol>(out);
}

Symbol Field::raw_pow(Symbol a, std::uint64_t j) const {
    Symbol r = 1, b = a;
    while (j) {
        if (j & 1) r = raw_mul(r, b);
        b = raw_mul(b, b);
        j >>= 1;
    }
    return r;
}

bool Field::is_primitive(Symbol g) const {
    if (g == 0) raise(ErrKind::Param, "primitivity is undefined for zero");
    if (g >= q_) raise(ErrKind::Param, "element out of range");
    std::uint32_t ord = n();
    if (ord == 1) return g == 1;
    for (std::uint32_t r : prime_factors(ord))
        if (raw_pow(g, ord / r) == 1) return false;
    return true;
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t e,
                                         const std::vector<Symbol>& modulus, Symbol alpha) {
    if (!is_prime(p)) raise(ErrKind::Param, "p is not prime");
    if (e < 1) raise(ErrKind::Param, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxQ) raise(ErrKind::Param, "field too large: q exceeds 2^16");
    }

    std::shared_ptr<Field> f(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = static_cast<std::uint32_t>(q);

    if (e == 1) {
        if (!modulus.empty())
            raise(ErrKind::Param, "modulus given for a prime field");
    } else {
        std::vector<Symbol> mod = modulus;
        if (mod.empty()) {
            if (p != 2)
                raise(ErrKind::Param,
                      "no built-in modulus for p = " + std::to_string(p) +
                          "; supply a defining polynomial");
            std::uint32_t bits = kBinaryModuli[e];
            for (std::uint32_t i = 0; i <= e; ++i) mod.push_back((bits >> i) & 1);
        }
        if (mod.size() != e + 1)
            raise(ErrKind::Param, "modulus must have degree e (e+1 coefficients)");
        for (Symbol c : mod)
            if (c >= p) raise(ErrKind::Param, "modulus coefficient out of range");
        if (mod[e] == 0) raise(ErrKind::Param, "modulus has zero leading coefficient");
        if (mod[e] != 1) {
            std::uint32_t lead_inv = mod_inverse(mod[e], p);
            for (auto& c : mod)
                c = static_cast<Symbol>(static_cast<std::uint64_t>(c) * lead_inv % p);
        }
        PPoly dense(mod.begin(), mod.end());
        if (!is_irreducible(dense, p, e))
            raise(ErrKind::Param, "reducible modulus");
        f->modulus_ = std::move(mod);
    }

    if (alpha != 0) {
        if (alpha >= f->q_) raise(ErrKind::Param, "alpha out of range");
        if (!f->is_primitive(alpha)) raise(ErrKind::Param, "alpha is not primitive");
        f->alpha_ = alpha;
    } else {
        Symbol found = 0;
        for (std::uint32_t g = 1; g < f->q_; ++g) {
            if (f->is_primitive(static_cast<Symbol>(g))) {
                found = static_cast<Symbol>(g);
                break;
            }
        }
        if (found == 0) raise(ErrKind::Internal, "no primitive element found");
        f->alpha_ = found;
    }

    std::uint32_t ord = f->n();
    f->exp_.assign(2 * ord, 0);
    f->log_.assign(f->q_, 0);
    Symbol cur = 1;
    for (std::uint32_t i = 0; i < ord; ++i) {
        f->exp_[i] = cur;
        f->exp_[i + ord] = cur;
        cur = f->raw_mul(cur, f->alpha_);
    }
    if (cur != 1) raise(ErrKind::Internal, "alpha power table does not close");
    std::vector<bool> seen(f->q_, false);
    for (std::uint32_t i = 0; i < ord; ++i) {
        Symbol v = f->exp_[i];
        if (v == 0 || seen[v]) raise(ErrKind::Internal, "alpha power table is not a bijection");
        seen[v] = true;
        f->log_[v] = i;
    }
    return f;
}

std::shared_ptr<const Field> Field::make_q(std::uint32_t q, const std::vector<Symbol>& modulus,
                                           Symbol alpha) {
    if (q < 2) raise(ErrKind::Param, "q must be at least 2");
    std::uint32_t p = q;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t e = 0;
    std::uint64_t acc = 1;
    while (acc < q) {
        acc *= p;
        ++e;
    }
    if (acc != q) raise(ErrKind::Param, "q is not a prime power");
    return make(p, e, modulus, alpha);
}

Symbol Field::add(Symbol a, Symbol b) const { return raw_add(a, b); }

Symbol Field::neg(Symbol a) const { return raw_neg(a); }

Symbol Field::sub(Symbol a, Symbol b) const { return raw_add(a, raw_neg(b)); }

Symbol Field::mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

Symbol Field::div(Symbol a, Symbol b) const {
    if (b == 0) raise(ErrKind::Param, "division by zero");
    if (a == 0) return 0;
    return exp_[log_[a] + n() - log_[b]];
}

Symbol Field::inv(Symbol a) const {
    if (a == 0) raise(ErrKind::Param, "zero has no inverse");
    return exp_[n() - log_[a]];  // exp_ is doubled, index n maps to alpha^0
}

Symbol Field::pow(Symbol a, std::int64_t j) const {
    if (a == 0) {
        if (j == 0) return 1;
        if (j < 0) raise(ErrKind::Param, "negative power of zero");
        return 0;
    }
    std::int64_t ord = n();
    std::int64_t jm = ((j % ord) + ord) % ord;
    std::uint64_t idx = static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(jm) %
                        static_cast<std::uint64_t>(ord);
    return exp_[idx];
}

Symbol Field::alpha_pow(std::int64_t j) const {
    std::int64_t ord = n();
    std::int64_t jm = ((j % ord) + ord) % ord;
    return exp_[jm];
}

std::uint32_t Field::log(Symbol a) const {
    if (a == 0) raise(ErrKind::Param, "log of zero");
    if (a >= q_) raise(ErrKind::Param, "element out of range");
    return log_[a];
}

}  // namespace dcconv
