#include "dendri/search.hpp"

#include "dendri/errors.hpp"
#include "dendri/rota_baxter.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>

namespace dendri {

namespace {

// Runs body(lo, hi, shard) over contiguous index ranges and returns the
// per-shard outputs in range order.
template <class Out, class Body>
std::vector<Out> sharded(std::uint64_t total, unsigned threads, Body body) {
    if (threads == 0) threads = default_threads();
    const std::uint64_t shards = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total));
    std::vector<Out> outs(shards);
    std::vector<std::exception_ptr> errors(shards);
    std::vector<std::thread> pool;
    for (std::uint64_t s = 0; s < shards; ++s) {
        const std::uint64_t lo = total * s / shards, hi = total * (s + 1) / shards;
        pool.emplace_back([&, s, lo, hi] {
            try {
                body(lo, hi, outs[s]);
            } catch (...) {
                errors[s] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return outs;
}

void require_searchable(const SearchSpace& space) {
    const Field& f = space.base.field;
    if (f.is_rational() || f.modulus() == 2) throw PreconditionFailed("search needs an odd prime field");
    space.base.validate();
    if (!check_dendriform(space.base).ok()) throw PreconditionFailed("search: base algebra is not dendriform");
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> SearchSpace::free_entries() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < base.dim; ++i)
        for (std::size_t j = 0; j < base.dim; ++j) {
            if (shape == Shape::symmetric && j < i) continue;
            if (shape == Shape::skew && j <= i) continue;
            if (fixed.count({i, j})) continue;
            out.emplace_back(i, j);
        }
    return out;
}

std::uint64_t SearchSpace::size() const {
    const Field& f = base.field;
    if (f.is_rational() || f.modulus() == 2) throw PreconditionFailed("search needs an odd prime field");
    std::uint64_t total = 1;
    for (std::size_t k = free_entries().size(); k > 0; --k) {
        total *= f.modulus();
        if (total > cap) throw PreconditionFailed("search space exceeds the cap of " + std::to_string(cap) + " candidates");
    }
    return total;
}

Matrix SearchSpace::candidate(std::uint64_t index) const {
    const Field& f = base.field;
    const std::uint32_t p = f.modulus();
    Matrix m(f, base.dim, base.dim);
    for (const auto& [ij, v] : fixed) {
        m.at(ij.first, ij.second) = v;
        if (shape == Shape::symmetric) m.at(ij.second, ij.first) = v;
        if (shape == Shape::skew) m.at(ij.second, ij.first) = -v;
    }
    const auto entries = free_entries();
    for (std::size_t k = entries.size(); k-- > 0;) {
        const Scalar v(f, static_cast<long long>(index % p));
        index /= p;
        const auto [i, j] = entries[k];
        m.at(i, j) = v;
        if (shape == Shape::symmetric) m.at(j, i) = v;
        if (shape == Shape::skew) m.at(j, i) = -v;
    }
    return m;
}

unsigned default_threads() {
    if (const char* env = std::getenv("DENDRI_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

DSearchResult enumerate_d_solutions(const SearchSpace& space, unsigned threads) {
    require_searchable(space);
    const std::uint64_t total = space.size();
    struct Shard {
        std::vector<DSolution> hits;
        std::uint64_t disagreements = 0;
    };
    const auto shards = sharded<Shard>(total, threads, [&](std::uint64_t lo, std::uint64_t hi, Shard& out) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            TwoTensor r(space.candidate(idx));
            const Tensor3 d = d_equation_defect(space.base, r);
            if (!(d == oracle_defect(space.base, r))) ++out.disagreements;
            if (!d.is_zero()) continue;
            ClassificationResult cls = classify(space.base, r);
            out.hits.push_back({std::move(r), std::move(cls)});
        }
    });
    DSearchResult res;
    res.scanned = total;
    for (const auto& s : shards) {
        res.solutions.insert(res.solutions.end(), s.hits.begin(), s.hits.end());
        res.oracle_disagreements += s.disagreements;
    }
    return res;
}

DSearchResult enumerate_d_solutions(const DendriformAlgebra& a, unsigned threads) {
    return enumerate_d_solutions(SearchSpace{a, SearchTarget::two_tensor, Shape::any, {}, 10'000'000}, threads);
}

std::vector<Matrix> enumerate_rb(const SearchSpace& space, const Scalar& lambda, unsigned threads) {
    require_searchable(space);
    if (!(lambda.field() == space.base.field)) throw FieldMismatch("weight over another field");
    const std::uint64_t total = space.size();
    const auto shards = sharded<std::vector<Matrix>>(total, threads, [&](std::uint64_t lo, std::uint64_t hi, std::vector<Matrix>& out) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            Matrix p = space.candidate(idx);
            if (check_rb(space.base, p, lambda).ok()) out.push_back(std::move(p));
        }
    });
    std::vector<Matrix> res;
    for (const auto& s : shards) res.insert(res.end(), s.begin(), s.end());
    return res;
}

std::vector<Matrix> enumerate_rb(const DendriformAlgebra& a, const Scalar& lambda, unsigned threads) {
    return enumerate_rb(SearchSpace{a, SearchTarget::rb_operator, Shape::any, {}, 10'000'000}, lambda, threads);
}

Tensor3 oracle_defect(const DendriformAlgebra& a, const TwoTensor& r) {
    const std::size_t n = a.dim;
    const Field& f = a.field;
    const Matrix id = Matrix::identity(f, n);
    Vector vr;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) vr.push_back(r.coeff.at(i, j));
    Tensor3 out(f, n);
    for (std::size_t p = 0; p < n; ++p) {
        const Vector ep = a.e(p);
        // (L∗(e_p) ⊗ Id) r sits in legs 1,3; (Id ⊗ L≺(e_p)) r in legs 2,3; (Id ⊗ L≻(e_p)) r in legs 1,2.
        const Vector star13 = kron(left_operator(a.prec, ep) + left_operator(a.succ, ep), id).apply(vr);
        const Vector prec23 = kron(id, left_operator(a.prec, ep)).apply(vr);
        const Vector succ12 = kron(id, left_operator(a.succ, ep)).apply(vr);
        for (std::size_t q = 0; q < n; ++q) {
            // r12∗r13: the first factor's term e_p⊗e_q puts e_q in leg 2.
            const Scalar& w = r.coeff.at(p, q);
            // r13≺r23: the first factor's term e_q⊗e_p puts e_q in leg 1.
            const Scalar& w13 = r.coeff.at(q, p);
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t t = 0; t < n; ++t) {
                    out.at(s, q, t) += w * star13[s * n + t];
                    out.at(q, s, t) -= w13 * prec23[s * n + t];
                    out.at(s, t, q) -= w * succ12[s * n + t];
                }
        }
    }
    return out;
}

Scalar reduce_mod(const Scalar& s, std::uint32_t p) {
    const Field f = Field::prime(p);
    if (s.field().is_rational()) return Scalar(f, s.rational());
    if (s.field().modulus() != p) throw FieldMismatch("cannot reduce between different prime fields");
    return s;
}

Matrix reduce_mod(const Matrix& m, std::uint32_t p) {
    Matrix out(Field::prime(p), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = reduce_mod(m.at(i, j), p);
    return out;
}

DendriformAlgebra reduce_mod(const DendriformAlgebra& a, std::uint32_t p) {
    DendriformAlgebra out = DendriformAlgebra::zero(Field::prime(p), a.dim);
    out.basis = a.basis;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) {
                out.prec.at(i, j, k) = reduce_mod(a.prec.at(i, j, k), p);
                out.succ.at(i, j, k) = reduce_mod(a.succ.at(i, j, k), p);
            }
    return out;
}

}  // namespace dendri
