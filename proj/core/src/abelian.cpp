#include "rgate/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rgate/errors.hpp"

namespace rgate::abelian {

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw precondition_violated("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& e) { return e == 0; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw precondition_violated("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

Int IntMatrix::determinant() const {
    if (!is_square()) throw precondition_violated("determinant: matrix not square");
    const int n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            m.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(int i, int j, const Int& k) {
    for (int c = 0; c < cols_; ++c) at(i, c) += k * at(j, c);
}

void IntMatrix::add_col(int i, int j, const Int& k) {
    for (int r = 0; r < rows_; ++r) at(r, i) += k * at(r, j);
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int i) {
    for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

std::vector<Int> SnfDecomposition::diagonal() const {
    std::vector<Int> d;
    const int n = std::min(s.rows(), s.cols());
    d.reserve(n);
    for (int i = 0; i < n; ++i) d.push_back(s.at(i, i));
    return d;
}

namespace {

// Smallest-absolute-value nonzero entry of S[k.., k..], ties by row-major
// position. Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& s, int k, int& pr, int& pc) {
    bool found = false;
    Int best;
    for (int i = k; i < s.rows(); ++i)
        for (int j = k; j < s.cols(); ++j) {
            const Int& e = s.at(i, j);
            if (e == 0) continue;
            Int a = abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& a) {
    SnfDecomposition d{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    IntMatrix& s = d.s;
    IntMatrix& u = d.u;
    IntMatrix& v = d.v;
    const int n = std::min(a.rows(), a.cols());

    for (int k = 0; k < n; ++k) {
        int pr = k, pc = k;
        if (!find_pivot(s, k, pr, pc)) break;
        s.swap_rows(k, pr);
        u.swap_rows(k, pr);
        s.swap_cols(k, pc);
        v.swap_cols(k, pc);

        for (;;) {
            // Clear column k below the pivot, then row k right of it. The
            // rounded quotient shrinks remainders; when one stays nonzero it
            // becomes the new (smaller) pivot and we loop.
            bool clean = true;
            for (int i = k + 1; i < s.rows(); ++i) {
                if (s.at(i, k) == 0) continue;
                Int q = round_div(s.at(i, k), s.at(k, k));
                s.add_row(i, k, -q);
                u.add_row(i, k, -q);
                if (s.at(i, k) != 0) {
                    s.swap_rows(k, i);
                    u.swap_rows(k, i);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            for (int j = k + 1; j < s.cols(); ++j) {
                if (s.at(k, j) == 0) continue;
                Int q = round_div(s.at(k, j), s.at(k, k));
                s.add_col(j, k, -q);
                v.add_col(j, k, -q);
                if (s.at(k, j) != 0) {
                    s.swap_cols(k, j);
                    v.swap_cols(k, j);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;

            // Pivot must divide the rest of the submatrix; if not, fold the
            // offending row in and restart the clearing loop.
            bool divides = true;
            for (int i = k + 1; i < s.rows() && divides; ++i)
                for (int j = k + 1; j < s.cols(); ++j)
                    if (s.at(i, j) % s.at(k, k) != 0) {
                        s.add_row(k, i, 1);
                        u.add_row(k, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }

        if (s.at(k, k) < 0) {
            s.negate_row(k);
            u.negate_row(k);
        }
    }
    return d;
}

FgAbelianGroup cokernel(const IntMatrix& a) {
    SnfDecomposition d = smith_normal_form(a);
    std::vector<Int> diag = d.diagonal();
    FgAbelianGroup g;
    int rank = 0;
    for (const Int& e : diag) {
        if (e == 0) continue;
        ++rank;
        if (e > 1) g.torsion.push_back(e);
    }
    g.free_rank = a.rows() - rank;
    return g;
}

std::optional<Int> order(const FgAbelianGroup& g) {
    if (g.free_rank > 0) return std::nullopt;
    Int n = 1;
    for (const Int& d : g.torsion) n *= d;
    return n;
}

std::vector<int> p_exponents(const FgAbelianGroup& g, const Int& p) {
    std::vector<int> exps;
    for (const Int& d : g.torsion) {
        int e = 0;
        Int m = d;
        while (m % p == 0) {
            ++e;
            m /= p;
        }
        if (e > 0) exps.push_back(e);
    }
    std::sort(exps.rbegin(), exps.rend());
    return exps;
}

namespace {

std::vector<Int> torsion_primes(const FgAbelianGroup& g) {
    std::vector<Int> primes;
    for (const Int& d : g.torsion) {
        Int m = d;
        Int p = 2;
        while (m > 1) {
            if (m % p == 0) {
                if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
                while (m % p == 0) m /= p;
            }
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            if (p * p > m && m > 1) {
                if (std::find(primes.begin(), primes.end(), m) == primes.end()) primes.push_back(m);
                break;
            }
        }
    }
    std::sort(primes.begin(), primes.end());
    return primes;
}

}  // namespace

bool embeds_into(const FgAbelianGroup& h, const FgAbelianGroup& g) {
    if (h.free_rank > g.free_rank) return false;
    // Torsion embeds into torsion; a free complement cannot absorb it.
    for (const Int& p : torsion_primes(h)) {
        std::vector<int> eh = p_exponents(h, p);
        std::vector<int> eg = p_exponents(g, p);
        if (eh.size() > eg.size()) return false;
        for (std::size_t i = 0; i < eh.size(); ++i)
            if (eh[i] > eg[i]) return false;
    }
    return true;
}

bool square_order_obstruction(const FgAbelianGroup& gm, const FgAbelianGroup& gp) {
    std::optional<Int> om = order(gm);
    std::optional<Int> op = order(gp);
    if (!om || !op) throw infinite_order("square_order_obstruction: group has positive free rank");
    return !is_perfect_square(*om * *op);
}

bool zhc_upgrade(const FgAbelianGroup& gm, const FgAbelianGroup& gp) { return gm == gp; }

FgAbelianGroup from_cyclic_orders(const std::vector<Int>& orders) {
    // Diagonal presentation matrix, then SNF via cokernel.
    IntMatrix m(static_cast<int>(orders.size()), static_cast<int>(orders.size()));
    for (std::size_t i = 0; i < orders.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = orders[i];
    return cokernel(m);
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < free_rank; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (const Int& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

}  // namespace rgate::abelian
