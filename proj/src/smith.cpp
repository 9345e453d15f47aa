#include "cyclowed/smith.hpp"

#include <algorithm>
#include <utility>

namespace cyclowed {

RationalMatrix to_rational(const IntMatrix& a)
{
    RationalMatrix r(a.rows(), a.cols(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = Rational(a(i, j));
    return r;
}

std::vector<Valuation> smith_valuations_dvr(const CycMatrix& a, std::int64_t p, int n)
{
    if (!a.is_square())
        throw DomainError("elementary divisors need a square matrix");
    std::vector<std::vector<CycElement>> w(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        w[i] = a.row(i);

    std::vector<Valuation> out;
    while (!w.empty()) {
        const std::size_t k = w.size();
        std::size_t pr = 0, pc = 0;
        Valuation best = Valuation::infinity();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const Valuation v = t_valuation(w[i][j], p, n);
                if (!v.is_infinite() && v.value() < 0)
                    throw DomainError("entry with negative t-valuation");
                if (v < best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (best.is_infinite())
            throw DomainError("singular matrix");
        out.push_back(best);

        const CycElement inv = w[pr][pc].inverse();
        for (std::size_t i = 0; i < k; ++i) {
            if (i == pr || w[i][pc].is_zero())
                continue;
            const CycElement f = w[i][pc] * inv;
            for (std::size_t j = 0; j < k; ++j)
                if (j != pc && !w[pr][j].is_zero())
                    w[i][j] -= f * w[pr][j];
        }
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(pr));
        for (auto& row : w)
            row.erase(row.begin() + static_cast<std::ptrdiff_t>(pc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Integer> smith_divisors_z(const IntMatrix& input)
{
    if (!input.is_square())
        throw DomainError("Smith normal form needs a square matrix");
    IntMatrix a = input;
    const std::size_t n = a.rows();
    std::vector<Integer> diag;
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            // Move an entry of least absolute value into (k, k).
            std::size_t pr = n, pc = n;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (a(i, j) != 0 && (pr == n || abs(a(i, j)) < abs(a(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == n)
                throw DomainError("singular matrix");
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(pr, j));
            for (std::size_t i = 0; i < n; ++i)
                std::swap(a(i, k), a(i, pc));

            bool clean = true;
            const Integer piv = a(k, k);
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a(i, k) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, k).get_mpz_t(), piv.get_mpz_t());
                for (std::size_t j = k; j < n; ++j)
                    a(i, j) -= q * a(k, j);
                if (a(i, k) != 0)
                    clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a(k, j) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(k, j).get_mpz_t(), piv.get_mpz_t());
                for (std::size_t i = k; i < n; ++i)
                    a(i, j) -= q * a(i, k);
                if (a(k, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // The pivot must divide the remaining block.
            std::size_t bad = n;
            for (std::size_t i = k + 1; i < n && bad == n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (mpz_divisible_p(a(i, j).get_mpz_t(), piv.get_mpz_t()) == 0) {
                        bad = i;
                        break;
                    }
            if (bad == n)
                break;
            for (std::size_t j = k; j < n; ++j)
                a(k, j) += a(bad, j);
        }
        diag.push_back(abs(a(k, k)));
    }
    return diag;
}

} // namespace cyclowed
