#pragma once

// Exact symbolic model of U_q(su(1,1)): PBW normal form F^a K^b E^c,
// star structure, iterated coproducts, and randomized exact identity checks.
//
// Scalars are exact rationals obtained by specializing (q,s,t,u).  To keep
// q^{1/2} exact we specialize q = r^2 for a rational r in (0,1) and carry r.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qaw/core.hpp"

namespace qaw::hopf {

struct PBWKey {
    long f = 0;  // exponent of F, >= 0
    long k = 0;  // exponent of K, any integer
    long e = 0;  // exponent of E, >= 0
    auto operator<=>(const PBWKey&) const = default;
};

enum class Gen { K, Kinv, E, F };

template <class R>
struct Element {
    std::map<PBWKey, R> terms;

    static Element zero() { return {}; }
    static Element one() { return monomial({0, 0, 0}, R(1)); }
    static Element monomial(PBWKey key, R coeff) {
        Element x;
        if (!(coeff == R(0))) x.terms[key] = coeff;
        return x;
    }

    Element& add_term(PBWKey key, const R& c) {
        if (c == R(0)) return *this;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms[key] = c;
        } else {
            it->second += c;
            if (it->second == R(0)) terms.erase(it);
        }
        return *this;
    }

    Element operator+(const Element& o) const {
        Element r = *this;
        for (auto& [key, c] : o.terms) r.add_term(key, c);
        return r;
    }
    Element operator-(const Element& o) const {
        Element r = *this;
        for (auto& [key, c] : o.terms) r.add_term(key, R(0) - c);
        return r;
    }
    Element scaled(const R& c) const {
        Element r;
        if (c == R(0)) return r;
        for (auto& [key, co] : terms) r.terms[key] = co * c;
        return r;
    }
    bool operator==(const Element& o) const = default;
};

template <class R>
struct Tensor {
    int degree = 1;
    std::map<std::vector<PBWKey>, R> terms;

    static Tensor one(int degree) {
        Tensor t;
        t.degree = degree;
        t.terms[std::vector<PBWKey>(degree, PBWKey{})] = R(1);
        return t;
    }
    Tensor& add_term(const std::vector<PBWKey>& key, const R& c) {
        if (c == R(0)) return *this;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms[key] = c;
        } else {
            it->second += c;
            if (it->second == R(0)) terms.erase(it);
        }
        return *this;
    }
    Tensor operator+(const Tensor& o) const {
        if (degree != o.degree) throw DegreeMismatch("tensor degree mismatch in +");
        Tensor r = *this;
        for (auto& [key, c] : o.terms) r.add_term(key, c);
        return r;
    }
    Tensor operator-(const Tensor& o) const {
        if (degree != o.degree) throw DegreeMismatch("tensor degree mismatch in -");
        Tensor r = *this;
        for (auto& [key, c] : o.terms) r.add_term(key, R(0) - c);
        return r;
    }
    bool operator==(const Tensor& o) const = default;
};

// The algebra with a fixed rational specialization.  q = root^2.
template <class R>
class Algebra {
  public:
    R root;  // q^{1/2}
    R q;

    explicit Algebra(R r_) : root(r_), q(r_ * r_) {
        if (q == R(0) || q == R(1)) throw DomainViolation("Algebra: q specialization must avoid 0 and 1");
    }

    R qpow(long n) const {
        R r(1);
        R b = n >= 0 ? q : R(1) / q;
        for (long i = 0; i < (n >= 0 ? n : -n); ++i) r *= b;
        return r;
    }
    R rootpow(long n) const {
        R r(1);
        R b = n >= 0 ? root : R(1) / root;
        for (long i = 0; i < (n >= 0 ? n : -n); ++i) r *= b;
        return r;
    }

    // ---- multiplication ----

    // Right-multiply a PBW monomial by one generator, yielding a normal form.
    Element<R> mul_gen(const PBWKey& m, const R& coeff, Gen g) const {
        Element<R> out;
        switch (g) {
            case Gen::K:
                // E^c K = q^{-c} K E^c
                out.add_term({m.f, m.k + 1, m.e}, coeff * qpow(-m.e));
                break;
            case Gen::Kinv:
                out.add_term({m.f, m.k - 1, m.e}, coeff * qpow(m.e));
                break;
            case Gen::E:
                out.add_term({m.f, m.k, m.e + 1}, coeff);
                break;
            case Gen::F: {
                // E^c F = F E^c + (S2 K^2 - Sm2 K^{-2}) E^{c-1} / (q - q^{-1}),
                // S2 = sum_{i<c} q^{-2i}, Sm2 = sum_{i<c} q^{2i};
                // then K^k F = q^{-k} F K^k moves F into PBW position
                out.add_term({m.f + 1, m.k, m.e}, coeff * qpow(-m.k));
                if (m.e > 0) {
                    R s2(0), sm2(0);
                    for (long i = 0; i < m.e; ++i) {
                        s2 += qpow(-2 * i);
                        sm2 += qpow(2 * i);
                    }
                    R denom = q - R(1) / q;
                    out.add_term({m.f, m.k + 2, m.e - 1}, coeff * s2 / denom);
                    out.add_term({m.f, m.k - 2, m.e - 1}, R(0) - coeff * sm2 / denom);
                }
                break;
            }
        }
        return out;
    }

    Element<R> mul_gen(const Element<R>& x, Gen g) const {
        Element<R> out;
        for (auto& [key, c] : x.terms)
            for (auto& [k2, c2] : mul_gen(key, c, g).terms) out.add_term(k2, c2);
        return out;
    }

    Element<R> mul(const Element<R>& x, const Element<R>& y) const {
        Element<R> out;
        for (auto& [ky, cy] : y.terms) {
            // expand the right factor as the word F^f K^k E^e
            Element<R> cur = x.scaled(cy);
            for (long i = 0; i < ky.f; ++i) cur = mul_gen(cur, Gen::F);
            for (long i = 0; i < (ky.k >= 0 ? ky.k : -ky.k); ++i)
                cur = mul_gen(cur, ky.k >= 0 ? Gen::K : Gen::Kinv);
            for (long i = 0; i < ky.e; ++i) cur = mul_gen(cur, Gen::E);
            for (auto& [key, c] : cur.terms) out.add_term(key, c);
        }
        return out;
    }

    Element<R> gen(Gen g) const {
        switch (g) {
            case Gen::K: return Element<R>::monomial({0, 1, 0}, R(1));
            case Gen::Kinv: return Element<R>::monomial({0, -1, 0}, R(1));
            case Gen::E: return Element<R>::monomial({0, 0, 1}, R(1));
            case Gen::F: return Element<R>::monomial({1, 0, 0}, R(1));
        }
        throw IndexOutOfRange("gen");
    }

    Element<R> normal_form(const std::vector<Gen>& word) const {
        Element<R> cur = Element<R>::one();
        for (Gen g : word) cur = mul_gen(cur, g);
        return cur;
    }

    // ---- star structure ----
    // (F^a K^b E^c)^* = (-1)^{a+c} F^c K^b E^a with scalar conjugation supplied
    // by the caller (identity for real rational specializations; circle
    // parameters are conjugated by rebuilding at the inverted specialization).
    Element<R> star(const Element<R>& x, const std::function<R(const R&)>& conj = nullptr) const {
        Element<R> out;
        for (auto& [key, c] : x.terms) {
            R cc = conj ? conj(c) : c;
            if ((key.f + key.e) % 2 != 0) cc = R(0) - cc;
            out.add_term({key.e, key.k, key.f}, cc);
        }
        return out;
    }

    // ---- coproduct ----

    Tensor<R> delta_gen(Gen g) const {
        Tensor<R> t;
        t.degree = 2;
        switch (g) {
            case Gen::K:
                t.add_term({{0, 1, 0}, {0, 1, 0}}, R(1));
                break;
            case Gen::Kinv:
                t.add_term({{0, -1, 0}, {0, -1, 0}}, R(1));
                break;
            case Gen::E:  // K ox E + E ox K^{-1}
                t.add_term({{0, 1, 0}, {0, 0, 1}}, R(1));
                t.add_term({{0, 0, 1}, {0, -1, 0}}, R(1));
                break;
            case Gen::F:  // K ox F + F ox K^{-1}
                t.add_term({{0, 1, 0}, {1, 0, 0}}, R(1));
                t.add_term({{1, 0, 0}, {0, -1, 0}}, R(1));
                break;
        }
        return t;
    }

    Tensor<R> tensor_mul(const Tensor<R>& a, const Tensor<R>& b) const {
        if (a.degree != b.degree) throw DegreeMismatch("tensor degree mismatch in mul");
        Tensor<R> out;
        out.degree = a.degree;
        for (auto& [ka, ca] : a.terms)
            for (auto& [kb, cb] : b.terms) {
                // slotwise products, then distribute
                std::vector<Element<R>> slot(a.degree);
                for (int i = 0; i < a.degree; ++i)
                    slot[i] = mul(Element<R>::monomial(ka[i], R(1)), Element<R>::monomial(kb[i], R(1)));
                std::vector<std::vector<PBWKey>> partial{{}};
                std::vector<R> pcoef{ca * cb};
                for (int i = 0; i < a.degree; ++i) {
                    std::vector<std::vector<PBWKey>> nxt;
                    std::vector<R> ncoef;
                    for (std::size_t p = 0; p < partial.size(); ++p)
                        for (auto& [key, c] : slot[i].terms) {
                            auto v = partial[p];
                            v.push_back(key);
                            nxt.push_back(std::move(v));
                            ncoef.push_back(pcoef[p] * c);
                        }
                    partial = std::move(nxt);
                    pcoef = std::move(ncoef);
                }
                for (std::size_t p = 0; p < partial.size(); ++p) out.add_term(partial[p], pcoef[p]);
            }
        return out;
    }

    Tensor<R> as_tensor(const Element<R>& x) const {
        Tensor<R> t;
        t.degree = 1;
        for (auto& [key, c] : x.terms) t.add_term({key}, c);
        return t;
    }

    // Delta applied to one PBW monomial (degree 2 image).
    Tensor<R> delta_key(const PBWKey& key) const {
        Tensor<R> cur = Tensor<R>::one(2);
        for (long i = 0; i < key.f; ++i) cur = tensor_mul(cur, delta_gen(Gen::F));
        for (long i = 0; i < (key.k >= 0 ? key.k : -key.k); ++i)
            cur = tensor_mul(cur, delta_gen(key.k >= 0 ? Gen::K : Gen::Kinv));
        for (long i = 0; i < key.e; ++i) cur = tensor_mul(cur, delta_gen(Gen::E));
        return cur;
    }

    // Apply Delta to one slot of a tensor, raising the degree by one.
    Tensor<R> apply_delta_slot(const Tensor<R>& t, int slot) const {
        Tensor<R> out;
        out.degree = t.degree + 1;
        for (auto& [key, c] : t.terms) {
            Tensor<R> d = delta_key(key[slot]);
            for (auto& [dk, dc] : d.terms) {
                std::vector<PBWKey> nk;
                nk.reserve(t.degree + 1);
                for (int i = 0; i < slot; ++i) nk.push_back(key[i]);
                nk.push_back(dk[0]);
                nk.push_back(dk[1]);
                for (int i = slot + 1; i < t.degree; ++i) nk.push_back(key[i]);
                out.add_term(nk, c * dc);
            }
        }
        return out;
    }

    // Delta^n : U_q -> U_q^{ox(n+1)}, Delta^0 = id.
    Tensor<R> coproduct_n(const Element<R>& x, int n) const {
        Tensor<R> cur = as_tensor(x);
        for (int i = 0; i < n; ++i) cur = apply_delta_slot(cur, 0);
        return cur;
    }

    // Embed into degree-d tensor algebra with x in the given slot range
    // [lo, lo+src.degree) and identity elsewhere.
    Tensor<R> embed(const Tensor<R>& src, int degree, int lo) const {
        if (lo < 0 || lo + src.degree > degree) throw IndexOutOfRange("embed: slot range");
        Tensor<R> out;
        out.degree = degree;
        for (auto& [key, c] : src.terms) {
            std::vector<PBWKey> nk(degree, PBWKey{});
            for (int i = 0; i < src.degree; ++i) nk[lo + i] = key[i];
            out.add_term(nk, c);
        }
        return out;
    }

    // ---- twisted primitives and their building blocks ----

    R mu(const R& z) const { return (z + R(1) / z) / (R(1) / q - q); }

    // Y_{s,u} = u q^{1/2} E K - u^{-1} q^{-1/2} F K + mu_s (K^2 - 1);
    // the E term is stored in PBW order, u q^{1/2} E K = u q^{-1/2} K E
    Element<R> Y(const R& s, const R& u) const {
        Element<R> out;
        out.add_term({0, 1, 1}, u / root);
        out.add_term({1, 1, 0}, R(0) - (R(1) / u) / root);
        R ms = mu(s);
        out.add_term({0, 2, 0}, ms);
        out.add_term({0, 0, 0}, R(0) - ms);
        return normal_form_of(out);
    }

    // Ytilde_{s,u} = u q^{-1/2} E K^{-1} - u^{-1} q^{1/2} F K^{-1} - mu_s (K^{-2} - 1);
    // the E term is stored in PBW order, u q^{-1/2} E K^{-1} = u q^{1/2} K^{-1} E
    Element<R> Ytilde(const R& s, const R& u) const {
        Element<R> out;
        out.add_term({0, -1, 1}, u * root);
        out.add_term({1, -1, 0}, R(0) - (R(1) / u) * root);
        R ms = mu(s);
        out.add_term({0, -2, 0}, R(0) - ms);
        out.add_term({0, 0, 0}, ms);
        return normal_form_of(out);
    }

    // Elements written with generator exponents in non-PBW slot order are
    // renormalized through multiplication.
    Element<R> normal_form_of(const Element<R>& x) const {
        Element<R> out;
        for (auto& [key, c] : x.terms) {
            Element<R> cur = Element<R>::monomial({0, 0, 0}, c);
            for (long i = 0; i < key.f; ++i) cur = mul_gen(cur, Gen::F);
            for (long i = 0; i < (key.k >= 0 ? key.k : -key.k); ++i)
                cur = mul_gen(cur, key.k >= 0 ? Gen::K : Gen::Kinv);
            for (long i = 0; i < key.e; ++i) cur = mul_gen(cur, Gen::E);
            for (auto& [k2, c2] : cur.terms) out.add_term(k2, c2);
        }
        return out;
    }

    // S = K^{-2}(Y_s + mu_s) - mu_s,  T = (K^{-2} Y_s - Y_s K^{-2})/(q^{-1} - q),
    // Stilde = K^2 (Ytilde_t - mu_t) + mu_t,
    // Ttilde = (Ytilde_t K^2 - K^2 Ytilde_t)/(q^{-1} - q).
    enum class STKind { S, T, Stilde, Ttilde };
    Element<R> build_ST(STKind kind, const R& spec) const {
        Element<R> kinv2 = Element<R>::monomial({0, -2, 0}, R(1));
        Element<R> k2 = Element<R>::monomial({0, 2, 0}, R(1));
        R m = mu(spec);
        R denom = R(1) / q - q;
        switch (kind) {
            case STKind::S: {
                Element<R> y = Y(spec, R(1));
                return mul(kinv2, y + Element<R>::monomial({0, 0, 0}, m)) -
                       Element<R>::monomial({0, 0, 0}, m);
            }
            case STKind::T: {
                Element<R> y = Y(spec, R(1));
                return (mul(kinv2, y) - mul(y, kinv2)).scaled(R(1) / denom);
            }
            case STKind::Stilde: {
                Element<R> yt = Ytilde(spec, R(1));
                return mul(k2, yt - Element<R>::monomial({0, 0, 0}, m)) +
                       Element<R>::monomial({0, 0, 0}, m);
            }
            case STKind::Ttilde: {
                Element<R> yt = Ytilde(spec, R(1));
                return (mul(yt, k2) - mul(k2, yt)).scaled(R(1) / denom);
            }
        }
        throw IndexOutOfRange("build_ST");
    }

    // Y^{(j)} = 1^{ox(N-j)} ox Delta^{j-1}(Y_{s,u})   in U_q^{ox N}
    Tensor<R> Yj(const R& s, const R& u, int j, int N) const {
        if (j < 1 || j > N) throw IndexOutOfRange("Yj: j out of range");
        return embed(coproduct_n(Y(s, u), j - 1), N, N - j);
    }
    // Ytilde^{(j)} = Delta^{j-1}(Ytilde_{t,u}) ox 1^{ox(N-j)}
    Tensor<R> Ytildej(const R& t, const R& u, int j, int N) const {
        if (j < 1 || j > N) throw IndexOutOfRange("Ytildej: j out of range");
        return embed(coproduct_n(Ytilde(t, u), j - 1), N, 0);
    }
};

// Random rational in (0,1) with small numerator/denominator; denominators are
// kept odd primes-ish to avoid accidental degeneracies.
template <class R>
R random_rational(std::mt19937_64& rng, long lo_num = 1, long hi_num = 9, long lo_den = 10, long hi_den = 23) {
    std::uniform_int_distribution<long> dn(lo_num, hi_num), dd(lo_den, hi_den);
    return R(dn(rng)) / R(dd(rng));
}

template <class R>
R random_nonzero_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dn(1, 12), dd(1, 12), sign(0, 1);
    R v = R(dn(rng)) / R(dd(rng));
    return sign(rng) ? v : R(0) - v;
}

// Schwartz-Zippel style identity check: the caller builds both sides from a
// fresh specialization each trial; exact equality of canonical forms.
template <class R>
bool verify_identity(const std::function<std::pair<Tensor<R>, Tensor<R>>(std::mt19937_64&)>& build,
                     int trials, std::uint64_t seed, std::string* failure = nullptr) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        auto [lhs, rhs] = build(rng);
        if (lhs.degree != rhs.degree) throw DegreeMismatch("verify_identity: degree mismatch");
        if (!(lhs == rhs)) {
            if (failure) *failure = "counterexample at trial " + std::to_string(i);
            return false;
        }
    }
    return true;
}

}  // namespace qaw::hopf
