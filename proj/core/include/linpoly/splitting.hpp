/*
   Copyright 2026 linpoly contributors

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

#ifndef LINPOLY_SPLITTING_HPP
#define LINPOLY_SPLITTING_HPP

#include "linpoly/field_impl.hpp"
#include "linpoly/upoly.hpp"

namespace linpoly {

/// A generator name not already used in the tower of ctx ("w", "w2", ...).
std::string fresh_gen_name(const FieldCtx& ctx);

/// Degree-`degree` extension of ctx with the deterministic-first irreducible
/// modulus; ctx itself when degree <= 1.
FieldCtx splitting_extension(const FieldCtx& ctx, u32 degree);

}  // namespace linpoly

#endif
