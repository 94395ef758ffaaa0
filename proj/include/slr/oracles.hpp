#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "slr/lr.hpp"

namespace slr {

class ConsistencyFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exponent vectors of fixed length n mapped to nonzero coefficients.
struct Polynomial {
    int n = 0;
    std::map<std::vector<int>, long long> terms;

    void add(const std::vector<int>& e, long long c) {
        auto& slot = terms[e];
        slot += c;
        if (slot == 0) terms.erase(e);
    }
    bool zero() const { return terms.empty(); }
    long long total() const {
        long long s = 0;
        for (const auto& [e, c] : terms) s += c;
        return s;
    }
};

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    Polynomial out{a.n, {}};
    std::vector<int> e(a.n);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            for (int i = 0; i < a.n; ++i) e[i] = ea[i] + eb[i];
            out.add(e, ca * cb);
        }
    return out;
}

// P_λ in n variables.
inline Polynomial p_polynomial(const StrictPartition& lambda, int n) {
    if (n < lambda.length()) throw ValidationError("too few variables for the partition length");
    Polynomial p{n, {}};
    std::vector<int> e(n);
    for_each_tableau(lambda, TableauConstraint::bound(n), [&](const Tableau& t) {
        std::fill(e.begin(), e.end(), 0);
        for (const auto& row : t.rows)
            for (Letter x : row) ++e[x.v - 1];
        p.add(e, 1);
        return true;
    });
    return p;
}

inline int max_strict_length(int size) {
    int l = 0;
    while ((l + 1) * (l + 2) / 2 <= size) ++l;
    return l;
}

// Expands products of P-functions over the P-basis by leading-monomial
// elimination. Keeps the truncated polynomials it has built.
class MonomialOracle {
public:
    const Polynomial& p(const StrictPartition& lambda, int n) {
        auto key = std::make_pair(lambda.parts(), n);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, p_polynomial(lambda, n)).first;
        return it->second;
    }

    // With n below the maximal length only the terms P_ν with ℓ(ν) <= n survive.
    std::map<StrictPartition, long long, std::greater<>> expand(const StrictPartition& lambda,
                                                                const StrictPartition& mu, int n = 0) {
        const int size = lambda.size() + mu.size();
        if (n <= 0) n = std::max(1, max_strict_length(size));
        Polynomial rem = multiply(p(lambda, n), p(mu, n));
        std::map<StrictPartition, long long, std::greater<>> out;
        while (!rem.zero()) {
            auto [lead, c] = *rem.terms.rbegin();
            std::vector<int> parts;
            for (int x : lead)
                if (x > 0) parts.push_back(x);
            for (std::size_t i = 0; i < lead.size(); ++i)
                if (lead[i] == 0 && i + 1 < lead.size() && lead[i + 1] > 0)
                    throw ConsistencyFailure("leading monomial is not a partition");
            StrictPartition nu;
            try {
                nu = StrictPartition(parts);
            } catch (const ValidationError&) {
                throw ConsistencyFailure("leading monomial is not a strict partition");
            }
            if (c < 0) throw ConsistencyFailure("negative coefficient in P-expansion");
            out[nu] = c;
            for (const auto& [e, d] : p(nu, n).terms) rem.add(e, -c * d);
            if (rem.terms.count(lead)) throw ConsistencyFailure("elimination did not cancel the leading term");
        }
        return out;
    }

    long long coefficient(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu) {
        if (lambda.size() + mu.size() != nu.size()) return 0;
        auto e = expand(lambda, mu);
        auto it = e.find(nu);
        return it == e.end() ? 0 : it->second;
    }

private:
    std::map<std::pair<std::vector<int>, int>, Polynomial> cache_;
};

inline long long coeff_by_monomials(const StrictPartition& lambda, const StrictPartition& mu,
                                    const StrictPartition& nu) {
    MonomialOracle o;
    return o.coefficient(lambda, mu, nu);
}

// Row-by-row filling with 1..|λ|.
inline Tableau standard_by_rows(const StrictPartition& lambda) {
    Tableau t;
    int v = 0;
    for (int r = 1; r <= lambda.length(); ++r) {
        t.rows.emplace_back();
        for (int i = 0; i < lambda.part(r); ++i) t.rows.back().push_back(unprimed(++v));
    }
    return t;
}

// Column-by-column filling with 1..|λ|.
inline Tableau standard_by_columns(const StrictPartition& lambda) {
    Tableau t;
    for (int r = 1; r <= lambda.length(); ++r) t.rows.emplace_back(lambda.part(r));
    int v = 0;
    const int last_col = lambda.length() ? lambda.part(1) : 0;
    for (int c = 1; c <= last_col; ++c)
        for (int r = 1; r <= lambda.length(); ++r)
            if (in_shifted(lambda, {r, c})) t.at({r, c}) = unprimed(++v);
    return t;
}

struct RectificationCount {
    long long count = 0;
    std::uint64_t fillings = 0;  // standard fillings of ν/μ enumerated
    std::uint64_t nodes = 0;     // search nodes visited while enumerating them
};

inline RectificationCount rectification_count(const StrictPartition& lambda, const StrictPartition& mu,
                                              const StrictPartition& nu, const Tableau& target) {
    RectificationCount rc;
    if (lambda.size() + mu.size() != nu.size() || !nu.contains(mu)) return rc;
    rc.nodes = for_each_standard_skew(nu, mu, [&](const SkewFilling& f) {
        ++rc.fillings;
        if (rectify(f) == target) ++rc.count;
        return true;
    });
    return rc;
}

inline long long coeff_by_rectification(const StrictPartition& lambda, const StrictPartition& mu,
                                        const StrictPartition& nu) {
    return rectification_count(lambda, mu, nu, standard_by_rows(lambda)).count;
}

// Tableaux T of shape λ with the interval content whose product with the
// barely Yamanouchi tableau of μ is that of ν.
inline long long coeff_by_completion(const StrictPartition& lambda, const StrictPartition& mu,
                                     const StrictPartition& nu, std::vector<Tableau>* witnesses = nullptr) {
    if (lambda.size() + mu.size() != nu.size() || !nu.contains(mu)) return 0;
    const Word ymu = barely_yamanouchi_sequence(mu);
    const Tableau ynu = barely_yamanouchi_tableau(nu);
    long long count = 0;
    for_each_tableau(lambda, TableauConstraint::content(interval_content(interval_system(mu, nu))),
                     [&](const Tableau& t) {
                         if (mixed_insert_word_into(t, ymu) == ynu) {
                             ++count;
                             if (witnesses) witnesses->push_back(t);
                         }
                         return true;
                     });
    return count;
}

}  // namespace slr
