/*
   Copyright 2026 The dtlsum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DTLSUM_SYMFUNC_HPP
#define DTLSUM_SYMFUNC_HPP

#include <map>
#include <string_view>
#include <vector>

#include "dtlsum/errors.hpp"
#include "dtlsum/ring.hpp"

namespace dtlsum {

/// 1 / (2 (w - w^-1)); w - w^-1 = 2w - 1 squares to -3.
inline Cyclo half_inv_omega_gap() { return (Cyclo(2) * (Cyclo::omega() - omega_pow(-1))).inverse(); }

/// E_0..E_n of the arguments.
template <ExactRing R>
std::vector<typename R::value_type> elem_all(const R& ring, Args<R> args) {
    std::vector<typename R::value_type> e(args.size() + 1, ring.zero());
    e[0] = ring.one();
    for (std::size_t k = 0; k < args.size(); ++k) {
        for (std::size_t m = k + 1; m >= 1; --m) e[m] = e[m] + e[m - 1] * args[k];
    }
    return e;
}

/// The arguments followed by their inverses.
template <ExactRing R>
std::vector<typename R::value_type> doubled_args(const R& ring, Args<R> args) {
    std::vector<typename R::value_type> d(args.begin(), args.end());
    for (const auto& a : args) d.push_back(ring.inv(a));
    return d;
}

/// Symmetric families of one argument list, computed on demand and memoized.
///
/// Index conventions: E_m is zero outside [0, n], eps_m outside [0, 2n],
/// mu_i outside [1, n], lambda_i for i >= n. Not shareable across threads.
template <ExactRing R>
class Families {
  public:
    using T = typename R::value_type;

    Families(R ring, std::vector<T> args) : ring_(std::move(ring)), args_(std::move(args)), zero_(ring_.zero()) {}

    const R& ring() const { return ring_; }
    int size() const { return static_cast<int>(args_.size()); }
    const std::vector<T>& args() const { return args_; }

    const T& E(int m) {
        if (m < 0 || m > size()) return zero_;
        if (e_.empty()) e_ = elem_all(ring_, Args<R>(args_));
        return e_[static_cast<std::size_t>(m)];
    }

    const T& eps(int m) {
        if (m < 0 || m > 2 * size()) return zero_;
        if (eps_.empty()) {
            auto d = doubled_args(ring_, Args<R>(args_));
            eps_ = elem_all(ring_, Args<R>(d));
        }
        return eps_[static_cast<std::size_t>(m)];
    }

    /// E_m of the inverted arguments.
    const T& E_inv(int m) {
        if (m < 0 || m > size()) return zero_;
        if (einv_.empty()) {
            std::vector<T> inv;
            for (const auto& a : args_) inv.push_back(ring_.inv(a));
            einv_ = elem_all(ring_, Args<R>(inv));
        }
        return einv_[static_cast<std::size_t>(m)];
    }

    const T& mu(int i) {
        const int L = size();
        if (i < 1 || i > L) return zero_;
        auto it = mu_.find(i);
        if (it != mu_.end()) return it->second;
        T s = ring_.zero();
        for (int m = 0; m <= L; ++m) {
            const T& a = E(m);
            const T& b = E(2 * i - m - 1);
            if (ring_.is_zero(a) || ring_.is_zero(b)) continue;
            Cyclo c = omega_pow(2 * (i - m) - 1) - omega_pow(2 * (m - i) + 1);
            if ((L + m) % 2 != 0) c = -c;
            if (c.is_zero()) continue;
            s = s + a * b * c;
        }
        return mu_.emplace(i, s * half_inv_omega_gap()).first->second;
    }

    const T& nu(int i) {
        const int L = size();
        if (i < 1 || i > 2 * L) return zero_;  // the sum is empty outside
        auto it = nu_.find(i);
        if (it != nu_.end()) return it->second;
        T s = ring_.zero();
        for (int j = 0; j <= 2 * L; ++j) {
            const T& a = eps(2 * i - 1 - j);
            const T& b = eps(j);
            if (ring_.is_zero(a) || ring_.is_zero(b)) continue;
            Cyclo c = omega_pow(2 * (j - i) + 1) - omega_pow(-2 * (j - i) - 1);
            if ((i + j) % 2 != 0) c = -c;
            if (c.is_zero()) continue;
            s = s + a * b * c;
        }
        return nu_.emplace(i, s * half_inv_omega_gap()).first->second;
    }

    const T& lam(int i) {
        const int L = size();
        if (i >= L) return zero_;  // i < 0 extends the sum and mirrors lambda_{-i}
        auto it = lam_.find(i);
        if (it != lam_.end()) return it->second;
        T s = ring_.zero();
        for (int k = i; k <= L - 1; ++k) s = (k % 2 == 0) ? s + nu(L - k) : s - nu(L - k);
        return lam_.emplace(i, std::move(s)).first->second;
    }

  private:
    R ring_;
    std::vector<T> args_;
    T zero_;
    std::vector<T> e_, eps_, einv_;
    std::map<int, T> mu_, nu_, lam_;
};

template <ExactRing R>
typename R::value_type elem_E(const R& ring, Args<R> args, int m) {
    if (m < 0 || m > static_cast<int>(args.size())) return ring.zero();
    return elem_all(ring, args)[static_cast<std::size_t>(m)];
}

template <ExactRing R>
typename R::value_type eps(const R& ring, Args<R> args, int m) {
    auto d = doubled_args(ring, args);
    return elem_E(ring, Args<R>(d), m);
}

/// eps_m through the convolution sum_n E_{L-n}(z) E_{L+n-m}(1/z).
template <ExactRing R>
typename R::value_type eps_conv(const R& ring, Args<R> args, int m) {
    Families<R> f(ring, {args.begin(), args.end()});
    const int L = f.size();
    auto s = ring.zero();
    for (int n = 0; n <= L; ++n) s = s + f.E(L - n) * f.E_inv(L + n - m);
    return s;
}

/// prod_{j != i} (z_i + z_j)(z_i z_j + 1) / (z_i z_j); i is 0-based.
template <ExactRing R>
typename R::value_type F_open(const R& ring, Args<R> args, std::size_t i) {
    if (i >= args.size()) throw std::out_of_range("distinguished index out of range");
    auto p = ring.one();
    const auto& zi = args[i];
    for (std::size_t j = 0; j < args.size(); ++j) {
        if (j == i) continue;
        auto prod = zi * args[j];
        p = p * (zi + args[j]) * (prod + ring.one()) * ring.inv(prod);
    }
    return p;
}

/// z_i prod_{j != i} (z_i + z_j); i is 0-based.
template <ExactRing R>
typename R::value_type F_periodic([[maybe_unused]] const R& ring, Args<R> args, std::size_t i) {
    if (i >= args.size()) throw std::out_of_range("distinguished index out of range");
    auto p = args[i];
    for (std::size_t j = 0; j < args.size(); ++j) {
        if (j != i) p = p * (args[i] + args[j]);
    }
    return p;
}

/// Periodic generating polynomial with parameter t.
template <ExactRing R>
typename R::value_type Pp_gen(const R& ring, Args<R> args, const typename R::value_type& t) {
    const Cyclo w = Cyclo::omega(), wi = omega_pow(-1);
    auto a = ring.one(), b = ring.one();
    for (const auto& z : args) {
        a = a * (z * w + t) * (z * wi - t);
        b = b * (z * wi + t) * (z * w - t);
    }
    return t * (a - b) * half_inv_omega_gap();
}

/// Open generating polynomial with parameter t; the (1 - t^2) division is exact.
template <ExactRing R>
typename R::value_type P_open_gen(const R& ring, Args<R> args, const typename R::value_type& t) {
    const Cyclo w = Cyclo::omega(), w2 = omega_pow(2), wi = omega_pow(-1), wi2 = omega_pow(-2);
    auto a = ring.one(), b = ring.one();
    for (const auto& z : args) {
        auto zt = ring.inv(z * t);
        auto zt2 = zt * zt;
        a = a * (t + z * w) * (ring.constant(w) + t * z) * (t + z * w2) * (ring.constant(w2) + t * z) * zt2;
        b = b * (t + z * wi) * (ring.constant(wi) + t * z) * (t + z * wi2) * (ring.constant(wi2) + t * z) * zt2;
    }
    auto num = t * (a - b) * half_inv_omega_gap();
    if (args.size() % 2 != 0) num = -num;
    return ring.divide(num, ring.one() - t * t);
}

/// Periodic polynomial normalized so that the value at one variable is 1.
/// Equals the compact closed form times i^L.
template <ExactRing R>
typename R::value_type Pp_fixed(const R& ring, Args<R> args) {
    Families<R> f(ring, {args.begin(), args.end()});
    const int L = f.size();
    auto s = ring.zero();
    // t = i, so t^(2k) = (-1)^k
    for (int k = 1; k <= L; ++k) s = (k % 2 == 0) ? s + f.mu(L - k + 1) : s - f.mu(L - k + 1);
    return ring.divide(s, f.E(L));
}

/// Open polynomial at t = w.
template <ExactRing R>
typename R::value_type P_open_fixed(const R& ring, Args<R> args) {
    return P_open_gen(ring, args, ring.constant(Cyclo::omega()));
}

// ---- symbolic conveniences over a VarSet ----------------------------------

LaurentPoly elem_E(const VarSetPtr& vars, int m);
LaurentPoly eps(const VarSetPtr& vars, int m);
LaurentPoly eps_conv(const VarSetPtr& vars, int m);
LaurentPoly F_open(const VarSetPtr& vars, std::size_t i);
LaurentPoly F_periodic(const VarSetPtr& vars, std::size_t i);
/// Result lives over vars followed by t; t must be fresh.
LaurentPoly Pp_gen(const VarSetPtr& vars, std::string_view t);
LaurentPoly P_open_gen(const VarSetPtr& vars, std::string_view t);
LaurentPoly Pp_fixed(const VarSetPtr& vars);
LaurentPoly P_open_fixed(const VarSetPtr& vars);
LaurentPoly mu(const VarSetPtr& vars, int i);
LaurentPoly nu(const VarSetPtr& vars, int i);
LaurentPoly lam(const VarSetPtr& vars, int i);

/// vars with one extra name appended.
VarSetPtr with_var(const VarSetPtr& vars, std::string_view name);

}  // namespace dtlsum

#endif  // DTLSUM_SYMFUNC_HPP
