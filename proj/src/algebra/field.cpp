#include "oort/algebra/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace oort {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1u << 22;

// x * a mod f, with a and f as digit vectors (f monic, length r+1).
std::vector<int> times_x(const std::vector<int>& a, const std::vector<int>& f, int p)
{
    int r = static_cast<int>(a.size());
    int top = a[r - 1];
    std::vector<int> out(r);
    for (int i = r - 1; i >= 1; --i)
        out[i] = a[i - 1];
    out[0] = 0;
    for (int i = 0; i < r; ++i)
        out[i] = static_cast<int>(mod(out[i] - static_cast<std::int64_t>(top) * f[i], p));
    return out;
}

bool is_primitive(const std::vector<int>& f, int p, int r, std::uint64_t q)
{
    std::vector<int> one(r, 0), cur(r, 0);
    one[0] = 1;
    cur[0] = 1;
    for (std::uint64_t k = 1; k < q - 1; ++k) {
        cur = times_x(cur, f, p);
        if (cur == one)
            return false;
        bool zero = true;
        for (int d : cur)
            zero = zero && d == 0;
        if (zero)
            return false;
    }
    return times_x(cur, f, p) == one;
}

}  // namespace

const GaloisField& GaloisField::get(int p, int r)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<GaloisField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, r);
    auto it = registry.find(key);
    if (it != registry.end())
        return *it->second;
    if (!is_prime(p))
        throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (r < 1)
        throw DomainError("extension degree must be positive");
    std::uint64_t q = 1;
    for (int i = 0; i < r; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > kMaxFieldSize)
            throw DomainError("field F_" + std::to_string(p) + "^" + std::to_string(r) + " too large");
    }
    auto* F = new GaloisField(p, r);
    registry.emplace(key, std::unique_ptr<GaloisField>(F));
    return *F;
}

GaloisField::GaloisField(int p, int r) : p_(p), r_(r)
{
    q_ = 1;
    pw_.push_back(1);
    for (int i = 0; i < r; ++i) {
        q_ *= static_cast<std::uint32_t>(p);
        pw_.push_back(q_);
    }
    modulus_.assign(r + 1, 0);
    modulus_[r] = 1;
    bool found = false;
    for (std::uint32_t code = 0; code < q_ && !found; ++code) {
        std::uint32_t c = code;
        for (int i = 0; i < r; ++i) {
            modulus_[i] = static_cast<int>(c % p);
            c /= p;
        }
        if (modulus_[0] == 0)
            continue;
        if (q_ == 2 || is_primitive(modulus_, p, r, q_))
            found = true;
    }
    if (!found)
        throw DomainError("no primitive polynomial found");

    exp_.assign(2 * (q_ - 1) + 1, 0);
    log_.assign(q_, 0);
    std::vector<int> cur(r, 0);
    cur[0] = 1;
    auto encode = [&](const std::vector<int>& d) {
        std::uint32_t v = 0;
        for (int i = r - 1; i >= 0; --i)
            v = v * p + d[i];
        return v;
    };
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
        std::uint32_t v = encode(cur);
        exp_[k] = v;
        log_[v] = k;
        cur = times_x(cur, modulus_, p);
    }
    for (std::uint32_t k = q_ - 1; k < exp_.size(); ++k)
        exp_[k] = exp_[k - (q_ - 1)];
    gen_ = r == 1 ? static_cast<std::uint32_t>(mod(-modulus_[0], p)) : static_cast<std::uint32_t>(p);
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const
{
    if (r_ == 1)
        return (a + b) % p_;
    std::uint32_t out = 0;
    for (int i = 0; i < r_; ++i) {
        std::uint32_t d = (a % p_ + b % p_) % p_;
        out += d * pw_[i];
        a /= p_;
        b /= p_;
    }
    return out;
}

std::uint32_t GaloisField::neg(std::uint32_t a) const
{
    if (r_ == 1)
        return a == 0 ? 0 : p_ - a;
    std::uint32_t out = 0;
    for (int i = 0; i < r_; ++i) {
        std::uint32_t d = a % p_;
        out += ((p_ - d) % p_) * pw_[i];
        a /= p_;
    }
    return out;
}

std::uint32_t GaloisField::sub(std::uint32_t a, std::uint32_t b) const
{
    return add(a, neg(b));
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const
{
    if (a == 0 || b == 0)
        return 0;
    return exp_[log_[a] + log_[b]];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const
{
    if (a == 0)
        throw DomainError("division by zero in F_q");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GaloisField::log(std::uint32_t a) const
{
    if (a == 0)
        throw DomainError("logarithm of zero");
    return log_[a];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::int64_t e) const
{
    if (a == 0) {
        if (e < 0)
            throw DomainError("division by zero in F_q");
        return e == 0 ? 1 : 0;
    }
    std::int64_t k = mod(static_cast<std::int64_t>(log_[a]) * mod(e, q_ - 1), q_ - 1);
    return exp_[k];
}

std::uint32_t GaloisField::proot(std::uint32_t a) const
{
    return pow(a, static_cast<std::int64_t>(q_ / p_));
}

std::uint32_t GaloisField::from_int(std::int64_t n) const
{
    return static_cast<std::uint32_t>(mod(n, p_));
}

std::vector<int> GaloisField::digits(std::uint32_t a) const
{
    std::vector<int> d(r_);
    for (int i = 0; i < r_; ++i) {
        d[i] = static_cast<int>(a % p_);
        a /= p_;
    }
    return d;
}

std::uint32_t GaloisField::from_digits(const std::vector<std::int64_t>& d) const
{
    std::uint32_t v = 0;
    for (int i = r_ - 1; i >= 0; --i)
        v = v * p_ + static_cast<std::uint32_t>(mod(i < static_cast<int>(d.size()) ? d[i] : 0, p_));
    return v;
}

int GaloisField::trace(std::uint32_t a) const
{
    std::uint32_t t = 0, cur = a;
    for (int i = 0; i < r_; ++i) {
        t = add(t, cur);
        cur = frobenius(cur);
    }
    return static_cast<int>(t);
}

std::string GaloisField::format(std::uint32_t a) const
{
    if (in_prime_field(a))
        return std::to_string(a);
    auto d = digits(a);
    std::string s;
    for (int i = r_ - 1; i >= 0; --i) {
        if (d[i] == 0)
            continue;
        if (!s.empty())
            s += "+";
        if (i == 0) {
            s += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1)
            s += std::to_string(d[i]) + "*";
        s += "g";
        if (i > 1)
            s += "^" + std::to_string(i);
    }
    return "(" + s + ")";
}

}  // namespace oort
