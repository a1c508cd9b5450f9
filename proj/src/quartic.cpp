#include "monogen/quartic.hpp"

#include "monogen/arith.hpp"
#include "monogen/finite_field.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace monogen {

namespace {

using i128 = __int128;

constexpr unsigned kSafeBits = 125;

unsigned bits_of(const Integer& n)
{
    return n == 0 ? 0u : static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

unsigned bits_of(std::int64_t n)
{
    return bits_of(from_i64(n));
}

i128 to_i128(const Integer& n)
{
    const Integer mag = abs(n);
    Integer hi_part;
    mpz_fdiv_q_2exp(hi_part.get_mpz_t(), mag.get_mpz_t(), 64);
    Integer lo_part;
    mpz_fdiv_r_2exp(lo_part.get_mpz_t(), mag.get_mpz_t(), 64);
    const unsigned __int128 v = (static_cast<unsigned __int128>(to_u64(hi_part)) << 64) | to_u64(lo_part);
    return n < 0 ? -static_cast<i128>(v) : static_cast<i128>(v);
}

Integer from_i128(i128 v)
{
    const bool neg = v < 0;
    const unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    Integer r = from_u64(static_cast<std::uint64_t>(mag >> 64));
    r <<= 64;
    r += from_u64(static_cast<std::uint64_t>(mag));
    return neg ? Integer(-r) : r;
}

template <class T>
T convert(const Integer& n)
{
    if constexpr (std::is_same_v<T, Integer>)
        return n;
    else
        return to_i128(n);
}

template <class T>
Integer back(const T& n)
{
    if constexpr (std::is_same_v<T, Integer>)
        return n;
    else
        return from_i128(n);
}

template <class T>
T ternary_eval(const std::array<T, 6>& c, const T& x, const T& y, const T& z)
{
    return c[0] * x * x + c[1] * x * y + c[2] * y * y + c[3] * x * z + c[4] * y * z + c[5] * z * z;
}

unsigned max_bits(const std::array<Integer, 6>& c)
{
    unsigned b = 0;
    for (const auto& v : c)
        b = std::max(b, bits_of(v));
    return b;
}

template <class T>
void scan_cubic(const std::vector<Integer>& coeffs, const Integer& rhs, std::int64_t bound,
                std::vector<std::pair<Integer, Integer>>& out)
{
    const std::size_t deg = coeffs.size() - 1;
    std::vector<T> c;
    for (const auto& x : coeffs)
        c.push_back(convert<T>(x));
    const T r = convert<T>(abs(rhs));
    std::vector<T> row(deg + 1);
    for (std::int64_t v = -bound; v <= bound; ++v) {
        // F(u, v) as a polynomial in u: row[i] = c_i v^i multiplies u^(deg - i).
        T vp = 1;
        for (std::size_t i = 0; i <= deg; ++i) {
            row[i] = c[i] * vp;
            vp *= T(v);
        }
        for (std::int64_t u = -bound; u <= bound; ++u) {
            T acc = row[0];
            for (std::size_t i = 1; i <= deg; ++i)
                acc = acc * T(u) + row[i];
            if (acc == r || acc == -r)
                out.emplace_back(from_i64(u), from_i64(v));
        }
    }
}

template <class T>
std::optional<Triple> scan_q0(const std::array<Integer, 6>& coeffs, std::int64_t bound)
{
    std::array<T, 6> c;
    for (std::size_t i = 0; i < 6; ++i)
        c[i] = convert<T>(coeffs[i]);
    for (std::int64_t z = 1; z <= bound; ++z)
        for (std::int64_t ay = 0; ay <= bound; ++ay)
            for (std::int64_t ax = 0; ax <= bound; ++ax)
                for (std::int64_t sy : {1, -1}) {
                    if (ay == 0 && sy < 0)
                        continue;
                    for (std::int64_t sx : {1, -1}) {
                        if (ax == 0 && sx < 0)
                            continue;
                        const std::int64_t x = sx * ax, y = sy * ay;
                        if (ternary_eval<T>(c, T(x), T(y), T(z)) == 0)
                            return Triple{from_i64(x), from_i64(y), from_i64(z)};
                    }
                }
    return std::nullopt;
}

struct PqJob {
    const Parametrization* param;
    const TernaryQuadraticForm* q1;
    const TernaryQuadraticForm* q2;
    Integer u;
    Integer v;
    std::int64_t bound;
};

template <class T>
void scan_pq(const PqJob& job, unsigned stride, unsigned offset, std::vector<Triple>& out)
{
    std::array<std::array<T, 3>, 3> cm;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            cm[i][j] = convert<T>(job.param->matrix[i][j]);
    std::array<T, 6> a1, a2;
    for (std::size_t i = 0; i < 6; ++i) {
        a1[i] = convert<T>(job.q1->c[i]);
        a2[i] = convert<T>(job.q2->c[i]);
    }
    std::vector<std::pair<T, T>> targets;  // (k, k^2) pairs
    for (const auto& k : job.param->k_divisors) {
        const T kk = convert<T>(k);
        targets.emplace_back(kk, kk * kk);
    }
    const T u = convert<T>(job.u);
    const T v = convert<T>(job.v);

    for (std::int64_t q = offset; q <= job.bound; q += stride) {
        for (std::int64_t p = -job.bound; p <= job.bound; ++p) {
            // (p, q) and (-p, -q) give the same monomials; keep q > 0 or (1, 0).
            if (q == 0 && p != 1)
                continue;
            if (std::gcd(p < 0 ? -p : p, q) != 1)
                continue;
            const T pp = T(p) * T(p), pq = T(p) * T(q), qq = T(q) * T(q);
            const T x = cm[0][0] * pp + cm[0][1] * pq + cm[0][2] * qq;
            const T y = cm[1][0] * pp + cm[1][1] * pq + cm[1][2] * qq;
            const T z = cm[2][0] * pp + cm[2][1] * pq + cm[2][2] * qq;
            if (x == 0 && y == 0 && z == 0)
                continue;
            const T f1 = ternary_eval<T>(a1, x, y, z);
            const T f2 = ternary_eval<T>(a2, x, y, z);
            for (const auto& [k, k2] : targets) {
                if (f1 != k2 * u || f2 != k2 * v)
                    continue;
                if (x % k != 0 || y % k != 0 || z % k != 0)
                    continue;
                out.push_back(Triple{back<T>(x / k), back<T>(y / k), back<T>(z / k)});
            }
        }
    }
}

std::vector<Triple> run_pq(const PqJob& job, unsigned threads)
{
    unsigned cbits = 0;
    for (const auto& row : job.param->matrix)
        for (const auto& e : row)
            cbits = std::max(cbits, bits_of(e));
    unsigned kbits = 0;
    for (const auto& k : job.param->k_divisors)
        kbits = std::max(kbits, bits_of(k));
    const unsigned coord_bits = cbits + 2 * bits_of(job.bound) + 2;
    const unsigned value_bits = std::max(max_bits(job.q1->c), max_bits(job.q2->c)) + 2 * coord_bits + 3;
    const unsigned rhs_bits = 2 * kbits + std::max(bits_of(job.u), bits_of(job.v)) + 1;
    const bool native = std::max(value_bits, rhs_bits) < kSafeBits;

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::int64_t>(threads, job.bound + 1));
    std::vector<std::vector<Triple>> partial(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            if (native)
                scan_pq<i128>(job, threads, t, partial[t]);
            else
                scan_pq<Integer>(job, threads, t, partial[t]);
        });
    }
    for (auto& th : pool)
        th.join();
    std::vector<Triple> out;
    for (auto& part : partial)
        for (auto& t : part)
            out.push_back(std::move(t));
    return out;
}

std::vector<Integer> signed_divisors_or_empty(const Integer& n, bool& complete)
{
    complete = true;
    if (n == 0)
        return {};
    const Factorization fac = factorize(n);
    if (!fac.complete()) {
        complete = false;
        return {};
    }
    return divisors(fac);
}

void sort_unique(std::vector<Triple>& ts)
{
    for (auto& t : ts)
        t = canonical(t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

std::string term_string(const Integer& coeff, const std::string& monomial, bool first)
{
    std::string out;
    const bool neg = coeff < 0;
    if (first)
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    const Integer mag = abs(coeff);
    if (monomial.empty() || mag != 1)
        out += mag.get_str();
    out += monomial;
    return out;
}

std::string power(char var, unsigned e)
{
    if (e == 0)
        return "";
    if (e == 1)
        return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(e);
}

} // namespace

QuarticSetup QuarticSetup::make(const IntPoly& f, const Integer& m, const Integer& d, const Integer& n_xi)
{
    if (f.degree() != 4 || !f.is_monic())
        throw InputError("quartic setup: f must be a monic quartic");
    if (m <= 0 || d <= 0 || n_xi <= 0)
        throw InputError("quartic setup: m, d and n_xi must be positive");
    QuarticSetup s;
    s.f = f;
    for (std::size_t i = 0; i < 4; ++i)
        s.a[i] = f[3 - i];
    s.d = d;
    s.n_xi = n_xi;
    s.m = m;
    const Integer num = pow(d, 6) * m;
    if (!divisible(num, n_xi))
        throw InputError("quartic setup: i_m = d^6 m / n_xi = " + num.get_str() + "/" + n_xi.get_str() +
                         " is not an integer");
    s.i_m = num / n_xi;
    return s;
}

Integer BinaryForm::eval(const Integer& s, const Integer& t) const
{
    Integer acc = 0;
    const unsigned deg = degree();
    for (unsigned i = 0; i <= deg; ++i)
        acc += coeffs[i] * pow(s, deg - i) * pow(t, i);
    return acc;
}

Integer BinaryForm::content() const
{
    Integer g = 0;
    for (const auto& c : coeffs)
        g = gcd(g, c);
    return g;
}

std::string BinaryForm::to_string(char s, char t) const
{
    std::string out;
    const unsigned deg = degree();
    bool first = true;
    for (unsigned i = 0; i <= deg; ++i) {
        if (coeffs[i] == 0)
            continue;
        out += term_string(coeffs[i], power(s, deg - i) + power(t, i), first);
        first = false;
    }
    return first ? "0" : out;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b)
{
    BinaryForm r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b)
{
    if (a.coeffs.size() != b.coeffs.size())
        throw DomainError("BinaryForm: adding forms of different degrees");
    BinaryForm r = a;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
        r.coeffs[i] += b.coeffs[i];
    return r;
}

BinaryForm operator*(const Integer& c, const BinaryForm& a)
{
    BinaryForm r = a;
    for (auto& x : r.coeffs)
        x *= c;
    return r;
}

std::string to_string(FormIrreducibility r)
{
    switch (r) {
    case FormIrreducibility::Irreducible: return "irreducible";
    case FormIrreducibility::Reducible: return "reducible";
    case FormIrreducibility::Unknown: return "unknown";
    }
    return "?";
}

FormIrreducibility binary_form_irreducibility(const BinaryForm& form)
{
    const unsigned deg = form.degree();
    if (deg <= 1)
        return FormIrreducibility::Irreducible;
    const Integer& lead = form.coeffs.front();
    const Integer& tail = form.coeffs.back();
    if (lead == 0 || tail == 0)
        return FormIrreducibility::Reducible;

    bool complete_lead = false, complete_tail = false;
    const auto lead_divs = signed_divisors_or_empty(lead, complete_lead);
    const auto tail_divs = signed_divisors_or_empty(tail, complete_tail);
    if (!complete_lead || !complete_tail)
        return FormIrreducibility::Unknown;
    // Linear factor (b s - a t) <=> F(a, b) = 0 with a | F(0,1), b | F(1,0).
    for (const auto& a : tail_divs)
        for (const auto& b : lead_divs)
            if (form.eval(a, b) == 0 || form.eval(-a, b) == 0)
                return FormIrreducibility::Reducible;
    if (deg <= 3)
        return FormIrreducibility::Irreducible;

    std::vector<Integer> asc(deg + 1);
    for (unsigned j = 0; j <= deg; ++j)
        asc[j] = form.coeffs[deg - j];
    const IntPoly g(asc);
    const Integer disc = discriminant(g);
    if (disc == 0)
        return FormIrreducibility::Reducible;
    std::bitset<64> possible;
    possible.set();
    int used = 0;
    for (std::uint32_t p : small_primes(2000)) {
        if (divisible(disc, Integer(p)) || divisible(lead, Integer(p)))
            continue;
        std::bitset<64> sums;
        sums.set(0);
        for (const auto& fac : factor_mod_p(g, p))
            for (unsigned k = 0; k < fac.multiplicity; ++k)
                sums |= sums << static_cast<std::size_t>(fac.factor.degree());
        possible &= sums;
        bool only_trivial = true;
        for (unsigned d = 1; d < deg; ++d)
            if (possible.test(d))
                only_trivial = false;
        if (only_trivial)
            return FormIrreducibility::Irreducible;
        if (++used >= 40)
            break;
    }
    return FormIrreducibility::Unknown;
}

Integer TernaryQuadraticForm::eval(const Integer& x, const Integer& y, const Integer& z) const
{
    return c[0] * x * x + c[1] * x * y + c[2] * y * y + c[3] * x * z + c[4] * y * z + c[5] * z * z;
}

bool TernaryQuadraticForm::is_zero() const
{
    return std::all_of(c.begin(), c.end(), [](const Integer& v) { return v == 0; });
}

std::string TernaryQuadraticForm::to_string() const
{
    static const std::array<const char*, 6> monomials = {"x^2", "xy", "y^2", "xz", "yz", "z^2"};
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < 6; ++i) {
        if (c[i] == 0)
            continue;
        out += term_string(c[i], monomials[i], first);
        first = false;
    }
    return first ? "0" : out;
}

TernaryQuadraticForm operator*(const Integer& k, const TernaryQuadraticForm& q)
{
    TernaryQuadraticForm r = q;
    for (auto& v : r.c)
        v *= k;
    return r;
}

TernaryQuadraticForm operator-(const TernaryQuadraticForm& a, const TernaryQuadraticForm& b)
{
    TernaryQuadraticForm r = a;
    for (std::size_t i = 0; i < 6; ++i)
        r.c[i] -= b.c[i];
    return r;
}

BinaryForm resolvent_cubic(const QuarticSetup& s)
{
    const auto& [a1, a2, a3, a4] = s.a;
    return BinaryForm{{Integer(1), Integer(-a2), Integer(a1 * a3 - 4 * a4),
                       Integer(4 * a2 * a4 - a3 * a3 - a1 * a1 * a4)}};
}

std::pair<TernaryQuadraticForm, TernaryQuadraticForm> quadratic_forms(const QuarticSetup& s)
{
    const auto& [a1, a2, a3, a4] = s.a;
    TernaryQuadraticForm q1{{Integer(1), Integer(-a1), a2, Integer(a1 * a1 - 2 * a2), Integer(a3 - a1 * a2),
                             Integer(-a1 * a3 + a2 * a2 + a4)}};
    TernaryQuadraticForm q2{{Integer(0), Integer(0), Integer(1), Integer(-1), Integer(-a1), a2}};
    return {q1, q2};
}

std::vector<std::pair<Integer, Integer>> solve_cubic_thue_small(const BinaryForm& form, const Integer& rhs,
                                                                std::int64_t bound)
{
    if (bound < 0)
        throw DomainError("solve_cubic_thue_small: negative bound");
    std::vector<std::pair<Integer, Integer>> out;
    unsigned cb = 0;
    for (const auto& c : form.coeffs)
        cb = std::max(cb, bits_of(c));
    const unsigned need = cb + form.degree() * (bits_of(bound) + 1) + 4;
    if (need < kSafeBits && bits_of(rhs) < kSafeBits)
        scan_cubic<i128>(form.coeffs, rhs, bound, out);
    else
        scan_cubic<Integer>(form.coeffs, rhs, bound, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Triple> q0_solution(const TernaryQuadraticForm& q0, std::int64_t bound)
{
    if (max_bits(q0.c) + 2 * (bits_of(bound) + 1) + 4 < kSafeBits)
        return scan_q0<i128>(q0.c, bound);
    return scan_q0<Integer>(q0.c, bound);
}

Triple Parametrization::apply(const Integer& p, const Integer& q) const
{
    const Integer pp = p * p, pq = p * q, qq = q * q;
    Triple t;
    for (std::size_t i = 0; i < 3; ++i)
        t[i] = matrix[i][0] * pp + matrix[i][1] * pq + matrix[i][2] * qq;
    return t;
}

Parametrization parametrize(const TernaryQuadraticForm& q0, const Triple& base)
{
    if (base[2] == 0)
        throw DomainError("parametrize: base point needs z0 != 0");
    if (q0.eval(base) != 0)
        throw DomainError("parametrize: base point is not a zero of Q0");
    const auto& [xx, xy, yy, xz, yz, zz] = q0.c;
    (void)zz;
    Triple prim = base;
    const Integer content = gcd(gcd(base[0], base[1]), base[2]);
    for (auto& v : prim)
        v /= content;
    const auto& [x0, y0, z0] = prim;

    Parametrization par;
    par.base = prim;
    // Q0(r b + (p, q, 0)) = r (c1 p + c2 q) + Q0(p, q, 0) since Q0(b) = 0.
    std::array<Integer, 5> c = {Integer(2 * xx * x0 + xy * y0 + xz * z0), Integer(xy * x0 + 2 * yy * y0 + yz * z0),
                                Integer(-xx), Integer(-xy), Integer(-yy)};
    const bool flip = c[0] < 0 || (c[0] == 0 && c[1] < 0);
    Integer g = 0;
    for (auto& v : c) {
        if (flip)
            v = -v;
        g = gcd(g, v);
    }
    if (g > 1)
        for (auto& v : c)
            v /= g;
    par.c = c;
    if (c[0] == 0 && c[1] == 0) {
        par.degenerate = true;
        return par;
    }
    const auto& [c1, c2, c3, c4, c5] = c;
    par.matrix = {{{Integer(x0 * c3 + c1), Integer(x0 * c4 + c2), Integer(x0 * c5)},
                   {Integer(y0 * c3), Integer(y0 * c4 + c1), Integer(y0 * c5 + c2)},
                   {Integer(z0 * c3), Integer(z0 * c4), Integer(z0 * c5)}}};
    const auto& m = par.matrix;
    par.det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    for (const auto& row : m)
        for (const auto& e : row)
            par.d0 = gcd(par.d0, e);
    if (par.det == 0 || par.d0 == 0) {
        par.degenerate = true;
        return par;
    }
    const Integer bound = abs(par.det) / (par.d0 * par.d0);
    par.k_divisors = divisors(factorize(bound));
    return par;
}

ThueSystem quartic_thue_forms(const Parametrization& param, const TernaryQuadraticForm& q1,
                              const TernaryQuadraticForm& q2, const Integer& u, const Integer& v, const Integer& k)
{
    if (param.degenerate)
        throw DomainError("quartic_thue_forms: degenerate parametrization");
    std::array<BinaryForm, 3> xyz;
    for (std::size_t i = 0; i < 3; ++i)
        xyz[i] = BinaryForm{{param.matrix[i][0], param.matrix[i][1], param.matrix[i][2]}};
    auto compose = [&](const TernaryQuadraticForm& q) {
        const auto& [x, y, z] = xyz;
        return q.c[0] * (x * x) + q.c[1] * (x * y) + q.c[2] * (y * y) + q.c[3] * (x * z) + q.c[4] * (y * z) +
               q.c[5] * (z * z);
    };
    ThueSystem sys;
    sys.f1 = compose(q1);
    sys.f2 = compose(q2);
    sys.rhs1 = k * k * u;
    sys.rhs2 = k * k * v;
    sys.f1_irreducible = binary_form_irreducibility(sys.f1);
    sys.f2_irreducible = binary_form_irreducibility(sys.f2);
    return sys;
}

Triple canonical(const Triple& t)
{
    for (const auto& c : t) {
        if (c == 0)
            continue;
        if (c < 0)
            return Triple{Integer(-t[0]), Integer(-t[1]), Integer(-t[2])};
        break;
    }
    return t;
}

std::vector<Triple> direct_search(const QuarticSetup& setup, const Integer& u, const Integer& v, std::int64_t bound)
{
    const auto [q1, q2] = quadratic_forms(setup);
    const Integer& a1 = setup.a[0];
    const Integer& a2 = setup.a[1];
    std::vector<Triple> out;
    const Integer b = from_i64(bound);
    for (std::int64_t zi = -bound; zi <= bound; ++zi) {
        const Integer z = from_i64(zi);
        if (zi == 0) {
            // Q2(x, y, 0) = y^2.
            if (v < 0 || !mpz_perfect_square_p(v.get_mpz_t()))
                continue;
            Integer root;
            mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
            if (root > b)
                continue;
            for (const Integer& y : {root, Integer(-root)})
                for (std::int64_t xi = -bound; xi <= bound; ++xi)
                    if (q1.eval(from_i64(xi), y, z) == u)
                        out.push_back(Triple{from_i64(xi), y, z});
            continue;
        }
        for (std::int64_t yi = -bound; yi <= bound; ++yi) {
            const Integer y = from_i64(yi);
            // x z = y^2 - a1 y z + a2 z^2 - v
            const Integer num = y * y - a1 * y * z + a2 * z * z - v;
            if (!divisible(num, z))
                continue;
            const Integer x = num / z;
            if (abs(x) > b)
                continue;
            if (q1.eval(x, y, z) == u)
                out.push_back(Triple{x, y, z});
        }
    }
    sort_unique(out);
    return out;
}

GeneratorSearch find_generators(const QuarticSetup& setup, const SearchBounds& bounds)
{
    if (bounds.thue < 1 || bounds.pq < 1 || bounds.xyz < 1 || bounds.q0 < 1)
        throw InputError("find_generators: search bounds must be positive");
    GeneratorSearch out;
    out.setup = setup;
    out.bounds = bounds;
    out.cubic = resolvent_cubic(setup);
    out.cubic_irreducible = binary_form_irreducibility(out.cubic);
    std::tie(out.q1, out.q2) = quadratic_forms(setup);
    out.cubic_solutions = solve_cubic_thue_small(out.cubic, setup.i_m, bounds.thue);

    std::map<Triple, std::pair<Integer, Integer>> found;
    for (const auto& [u, v] : out.cubic_solutions) {
        BranchReport br;
        br.u = u;
        br.v = v;
        br.q0 = u * out.q2 - v * out.q1;
        br.base = q0_solution(br.q0, bounds.q0);
        if (br.base) {
            Parametrization par = parametrize(br.q0, *br.base);
            if (!par.degenerate) {
                br.thue = quartic_thue_forms(par, out.q1, out.q2, u, v, 1);
                br.param = std::move(par);
            } else {
                br.note = "degenerate parametrization";
            }
        } else {
            br.note = "no zero of Q0 with z != 0 in the box";
        }

        if (br.param) {
            br.method = BranchReport::Method::Parametrized;
            PqJob job{&*br.param, &out.q1, &out.q2, u, v, bounds.pq};
            br.solutions = run_pq(job, bounds.threads);
            // The base direction itself is the point at infinity of the
            // parametrization: test its multiples directly.
            const Triple& b = br.param->base;
            const Integer qb1 = out.q1.eval(b), qb2 = out.q2.eval(b);
            const Integer& ref = qb1 != 0 ? qb1 : qb2;
            const Integer& target = qb1 != 0 ? u : v;
            if (ref != 0 && divisible(target, ref)) {
                const Integer lam2 = target / ref;
                if (lam2 > 0 && mpz_perfect_square_p(lam2.get_mpz_t())) {
                    Integer lam;
                    mpz_sqrt(lam.get_mpz_t(), lam2.get_mpz_t());
                    const Triple t{Integer(lam * b[0]), Integer(lam * b[1]), Integer(lam * b[2])};
                    if (out.q1.eval(t) == u && out.q2.eval(t) == v)
                        br.solutions.push_back(t);
                }
            }
        } else {
            br.method = BranchReport::Method::DirectFallback;
            br.solutions = direct_search(setup, u, v, bounds.xyz);
        }
        sort_unique(br.solutions);

        for (const auto& t : br.solutions) {
            if (out.q1.eval(t) != u || out.q2.eval(t) != v)
                throw std::logic_error("find_generators: emitted triple fails Q1 = u, Q2 = v");
            found.emplace(t, std::make_pair(u, v));
        }
        out.branches.push_back(std::move(br));
    }

    for (const auto& [t, uv] : found) {
        const Integer value = out.cubic.eval(uv.first, uv.second);
        if (abs(value) != setup.i_m)
            throw std::logic_error("find_generators: branch violates F(u, v) = +-i_m");
        out.solutions.push_back({t, uv.first, uv.second});
    }
    return out;
}

Integer index_of_element(const IntPoly& f, const Triple& xyz, const Integer& d, const Integer& disc_k)
{
    if (!f.is_monic() || f.degree() != 4)
        throw DomainError("index_of_element: f must be a monic quartic");
    if (d <= 0 || disc_k == 0)
        throw DomainError("index_of_element: d must be positive and D_K nonzero");
    const IntPoly g(std::vector<Integer>{0, xyz[0], xyz[1], xyz[2]});
    std::vector<std::vector<Integer>> mat(4, std::vector<Integer>(4));
    IntPoly column = g;
    for (std::size_t j = 0; j < 4; ++j) {
        const IntPoly reduced = column.divmod_monic(f).second;
        for (std::size_t i = 0; i < 4; ++i)
            mat[i][j] = reduced[i];
        column = reduced * IntPoly::x();
    }
    const IntPoly chi = characteristic_polynomial(mat);
    const Integer disc_g = discriminant(chi);
    if (disc_g == 0)
        throw DomainError("index_of_element: element is not primitive");
    const Integer denom = pow(d, 12) * disc_k;
    if (!divisible(disc_g, denom))
        throw DomainError("index_of_element: D(alpha)/D_K is not an integer (" + disc_g.get_str() + " / " +
                          denom.get_str() + ")");
    const Integer ratio = disc_g / denom;
    if (ratio <= 0 || !mpz_perfect_square_p(ratio.get_mpz_t()))
        throw DomainError("index_of_element: D(alpha)/D_K = " + ratio.get_str() + " is not a square");
    Integer root;
    mpz_sqrt(root.get_mpz_t(), ratio.get_mpz_t());
    return root;
}

std::string to_string(const Triple& t)
{
    return "(" + t[0].get_str() + "," + t[1].get_str() + "," + t[2].get_str() + ")";
}

} // namespace monogen
