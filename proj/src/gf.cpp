#include <c4star/gf.hpp>

#include <c4star/errors.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace c4star {

namespace {

    auto is_prime(long long n) -> bool
    {
        if (n < 2)
            return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

    // Polynomials over GF(p) as coefficient vectors, lowest degree first.
    using Poly = std::vector<int>;

    auto decode(int code, int p, int len) -> Poly
    {
        Poly out(static_cast<std::size_t>(len), 0);
        for (int i = 0; i < len; ++i) {
            out[static_cast<std::size_t>(i)] = code % p;
            code /= p;
        }
        return out;
    }

    auto encode(const Poly & poly, int p) -> int
    {
        int code = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it)
            code = code * p + *it;
        return code;
    }

    auto trim(Poly poly) -> Poly
    {
        while (! poly.empty() && poly.back() == 0)
            poly.pop_back();
        return poly;
    }

    auto inverse_mod_prime(int a, int p) -> int
    {
        for (int b = 1; b < p; ++b)
            if (a * b % p == 1)
                return b;
        throw std::logic_error("no inverse modulo prime");
    }

    // Remainder of a modulo a nonzero polynomial m.
    auto poly_mod(Poly a, const Poly & m, int p) -> Poly
    {
        a = trim(std::move(a));
        auto mt = trim(m);
        int lead_inv = inverse_mod_prime(mt.back(), p);
        while (a.size() >= mt.size()) {
            int factor = a.back() * lead_inv % p;
            auto shift = a.size() - mt.size();
            for (std::size_t i = 0; i < mt.size(); ++i)
                a[shift + i] = ((a[shift + i] - factor * mt[i]) % p + p) % p;
            a = trim(std::move(a));
        }
        return a;
    }

    auto poly_mul(const Poly & a, const Poly & b, int p) -> Poly
    {
        if (a.empty() || b.empty())
            return {};
        Poly out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        return out;
    }

    // Trial division by every monic polynomial of degree 1..deg/2.
    auto is_irreducible(const Poly & f, int p) -> bool
    {
        int deg = static_cast<int>(f.size()) - 1;
        for (int d = 1; 2 * d <= deg; ++d) {
            int count = 1;
            for (int i = 0; i < d; ++i)
                count *= p;
            for (int low = 0; low < count; ++low) {
                auto g = decode(low, p, d);
                g.push_back(1);
                if (poly_mod(f, g, p).empty())
                    return false;
            }
        }
        return true;
    }

    auto smallest_irreducible(int p, int e) -> Poly
    {
        int count = 1;
        for (int i = 0; i < e; ++i)
            count *= p;
        for (int low = 0; low < count; ++low) {
            auto f = decode(low, p, e);
            f.push_back(1);
            if (is_irreducible(f, p))
                return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

} // namespace

auto factor_prime_power(long long q) -> std::optional<PrimePower>
{
    if (q < 2)
        return std::nullopt;
    long long p = 2;
    while (q % p != 0)
        ++p;
    if (! is_prime(p))
        return std::nullopt;
    long long rest = q;
    int e = 0;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1 || q > std::numeric_limits<int>::max())
        return std::nullopt;
    return PrimePower{static_cast<int>(p), e, static_cast<int>(q)};
}

auto is_prime_power(long long q) -> bool
{
    return factor_prime_power(q).has_value();
}

auto prime_powers_up_to(int cap) -> std::vector<int>
{
    // Sieve the primes, then collect their powers.
    std::vector<bool> composite(static_cast<std::size_t>(std::max(cap, 1)) + 1, false);
    std::vector<bool> hit(composite.size(), false);
    for (long long p = 2; p <= cap; ++p) {
        if (composite[static_cast<std::size_t>(p)])
            continue;
        for (long long m = p * p; m <= cap; m += p)
            composite[static_cast<std::size_t>(m)] = true;
        for (long long pw = p; pw <= cap; pw *= p)
            hit[static_cast<std::size_t>(pw)] = true;
    }
    std::vector<int> out;
    for (int v = 2; v <= cap; ++v)
        if (hit[static_cast<std::size_t>(v)])
            out.push_back(v);
    return out;
}

FiniteField::FiniteField(int q)
{
    auto pp = factor_prime_power(q);
    if (! pp || q > max_order)
        throw NotPrimePower(q);
    q_ = pp->q;
    p_ = pp->p;
    e_ = pp->e;
    modulus_ = smallest_irreducible(p_, e_);

    // Multiplication on poly codes, then locate alpha by order.
    std::vector<int> poly_mul_table(static_cast<std::size_t>(q_ * q_));
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) {
            auto prod = poly_mod(poly_mul(decode(a, p_, e_), decode(b, p_, e_), p_), modulus_, p_);
            poly_mul_table[static_cast<std::size_t>(a * q_ + b)] = encode(prod, p_);
        }

    auto code_order = [&](int a) {
        int x = a, k = 1;
        while (x != 1) {
            x = poly_mul_table[static_cast<std::size_t>(x * q_ + a)];
            ++k;
        }
        return k;
    };

    int alpha_code = -1;
    for (int a = 1; a < q_; ++a)
        if (code_order(a) == q_ - 1) {
            alpha_code = a;
            break;
        }
    if (alpha_code < 0)
        throw std::logic_error("field has no primitive element");

    id_to_poly_.assign(static_cast<std::size_t>(q_), 0);
    poly_to_id_.assign(static_cast<std::size_t>(q_), 0);
    int x = alpha_code;
    for (int j = 1; j < q_; ++j) {
        id_to_poly_[static_cast<std::size_t>(j)] = x;
        poly_to_id_[static_cast<std::size_t>(x)] = j;
        x = poly_mul_table[static_cast<std::size_t>(x * q_ + alpha_code)];
    }

    add_table_.assign(static_cast<std::size_t>(q_ * q_), 0);
    neg_table_.assign(static_cast<std::size_t>(q_), 0);
    for (int a = 0; a < q_; ++a) {
        auto pa = decode(id_to_poly_[static_cast<std::size_t>(a)], p_, e_);
        Poly negated(pa.size());
        for (std::size_t i = 0; i < pa.size(); ++i)
            negated[i] = (p_ - pa[i]) % p_;
        neg_table_[static_cast<std::size_t>(a)] =
            static_cast<std::uint16_t>(poly_to_id_[static_cast<std::size_t>(encode(negated, p_))]);
        for (int b = 0; b < q_; ++b) {
            auto pb = decode(id_to_poly_[static_cast<std::size_t>(b)], p_, e_);
            Poly sum(pa.size());
            for (std::size_t i = 0; i < pa.size(); ++i)
                sum[i] = (pa[i] + pb[i]) % p_;
            add_table_[static_cast<std::size_t>(a * q_ + b)] =
                static_cast<std::uint16_t>(poly_to_id_[static_cast<std::size_t>(encode(sum, p_))]);
        }
    }
}

auto FiniteField::check(FieldElement a) const -> void
{
    if (a.id >= q_)
        throw std::out_of_range("element does not belong to GF(" + std::to_string(q_) + ")");
}

auto FiniteField::alpha_pow(long long j) const -> FieldElement
{
    long long r = ((j % (q_ - 1)) + (q_ - 1)) % (q_ - 1);
    return FieldElement{static_cast<std::uint16_t>(r == 0 ? q_ - 1 : r)};
}

auto FiniteField::element(int id) const -> FieldElement
{
    FieldElement a{static_cast<std::uint16_t>(id)};
    if (id < 0)
        throw std::out_of_range("negative element id");
    check(a);
    return a;
}

auto FiniteField::elements() const -> std::vector<FieldElement>
{
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(q_));
    for (int i = 0; i < q_; ++i)
        out.push_back(FieldElement{static_cast<std::uint16_t>(i)});
    return out;
}

auto FiniteField::from_poly(int code) const -> FieldElement
{
    if (code < 0 || code >= q_)
        throw std::out_of_range("polynomial code out of range");
    return FieldElement{static_cast<std::uint16_t>(poly_to_id_[static_cast<std::size_t>(code)])};
}

auto FiniteField::to_poly(FieldElement a) const -> int
{
    check(a);
    return id_to_poly_[a.id];
}

auto FiniteField::ordering_key(FieldElement a) const -> int
{
    check(a);
    return a.id;
}

auto FiniteField::add(FieldElement a, FieldElement b) const -> FieldElement
{
    check(a);
    check(b);
    return FieldElement{add_table_[static_cast<std::size_t>(a.id * q_ + b.id)]};
}

auto FiniteField::neg(FieldElement a) const -> FieldElement
{
    check(a);
    return FieldElement{neg_table_[a.id]};
}

auto FiniteField::sub(FieldElement a, FieldElement b) const -> FieldElement
{
    return add(a, neg(b));
}

auto FiniteField::mul(FieldElement a, FieldElement b) const -> FieldElement
{
    check(a);
    check(b);
    if (a.id == 0 || b.id == 0)
        return zero();
    return alpha_pow(static_cast<long long>(a.id) + b.id);
}

auto FiniteField::inv(FieldElement a) const -> FieldElement
{
    check(a);
    if (a.id == 0)
        throw DivisionByZero();
    return alpha_pow(-static_cast<long long>(a.id));
}

auto FiniteField::div(FieldElement a, FieldElement b) const -> FieldElement
{
    return mul(a, inv(b));
}

auto FiniteField::pow(FieldElement a, long long k) const -> FieldElement
{
    check(a);
    if (a.id == 0) {
        if (k == 0)
            return one();
        if (k < 0)
            throw DivisionByZero();
        return zero();
    }
    long long m = q_ - 1;
    long long r = (static_cast<long long>(a.id) % m) * (((k % m) + m) % m) % m;
    return alpha_pow(r);
}

auto FiniteField::multiplicative_order(FieldElement a) const -> int
{
    check(a);
    if (a.id == 0)
        throw DivisionByZero();
    int k = 1;
    for (auto x = a; x != one(); x = mul(x, a))
        ++k;
    return k;
}

} // namespace c4star
