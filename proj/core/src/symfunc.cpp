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

#include "dtlsum/symfunc.hpp"

namespace dtlsum {

namespace {

struct Sym {
    PolyRing ring;
    std::vector<LaurentPoly> z;
    explicit Sym(const VarSetPtr& vars) : ring(vars), z(ring.generators()) {}
    Args<PolyRing> args() const { return z; }
};

}  // namespace

VarSetPtr with_var(const VarSetPtr& vars, std::string_view name) {
    if (vars->index_of(name)) throw std::invalid_argument("variable '" + std::string(name) + "' already present");
    auto names = vars->names();
    names.emplace_back(name);
    return VarSet::make(std::move(names));
}

LaurentPoly elem_E(const VarSetPtr& vars, int m) {
    Sym s(vars);
    return elem_E(s.ring, s.args(), m);
}

LaurentPoly eps(const VarSetPtr& vars, int m) {
    Sym s(vars);
    return eps(s.ring, s.args(), m);
}

LaurentPoly eps_conv(const VarSetPtr& vars, int m) {
    Sym s(vars);
    return eps_conv(s.ring, s.args(), m);
}

LaurentPoly F_open(const VarSetPtr& vars, std::size_t i) {
    Sym s(vars);
    return F_open(s.ring, s.args(), i);
}

LaurentPoly F_periodic(const VarSetPtr& vars, std::size_t i) {
    Sym s(vars);
    return F_periodic(s.ring, s.args(), i);
}

LaurentPoly Pp_gen(const VarSetPtr& vars, std::string_view t) {
    Sym s(with_var(vars, t));
    auto z = std::span<const LaurentPoly>(s.z).first(vars->size());
    return Pp_gen(s.ring, z, s.z.back());
}

LaurentPoly P_open_gen(const VarSetPtr& vars, std::string_view t) {
    Sym s(with_var(vars, t));
    auto z = std::span<const LaurentPoly>(s.z).first(vars->size());
    return P_open_gen(s.ring, z, s.z.back());
}

LaurentPoly Pp_fixed(const VarSetPtr& vars) {
    Sym s(vars);
    return Pp_fixed(s.ring, s.args());
}

LaurentPoly P_open_fixed(const VarSetPtr& vars) {
    Sym s(vars);
    return P_open_fixed(s.ring, s.args());
}

LaurentPoly mu(const VarSetPtr& vars, int i) {
    Sym s(vars);
    return Families<PolyRing>(s.ring, s.z).mu(i);
}

LaurentPoly nu(const VarSetPtr& vars, int i) {
    Sym s(vars);
    return Families<PolyRing>(s.ring, s.z).nu(i);
}

LaurentPoly lam(const VarSetPtr& vars, int i) {
    Sym s(vars);
    return Families<PolyRing>(s.ring, s.z).lam(i);
}

}  // namespace dtlsum
