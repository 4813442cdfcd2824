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

#ifndef DTLSUM_SERIALIZE_HPP
#define DTLSUM_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "dtlsum/cyclo.hpp"
#include "dtlsum/laurent.hpp"

namespace dtlsum {

using json = nlohmann::ordered_json;

// {"a": "p/q", "b": "r/s"}
json to_json(const Cyclo& c);
Cyclo cyclo_from_json(const json& j);

// {"vars": [...], "terms": [{"exponents": [...], "coeff": {...}}, ...]}
// Terms appear in canonical (ascending) order.
json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

// {"z1": {...}, "z2": {...}} in variable order
json to_json(const EvalPoint& pt);

}  // namespace dtlsum

#endif  // DTLSUM_SERIALIZE_HPP
