// Copyright 2026 The sharpcsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "sharpcsp/gadget.h"
#include "sharpcsp/relation_props.h"

namespace sharpcsp {

// Gadget constructors. Each takes the source relation together with the name
// it carries in the caller's language, returns a gadget whose body uses that
// name (plus delta0/delta1 where the construction allows), and verifies the
// result before returning it (InternalError on failure).
//
// Derived binary targets are always reported as one of the built-ins; a
// reversed Implies is expressed by swapping the distinguished variables.

/// R(x, ..., x) claiming delta0 (R 0-valid, not 1-valid) or delta1 (R 1-valid,
/// not 0-valid). PreconditionError otherwise.
Gadget pin_from_validity(const std::string& name, const Relation& r);

/// For R not complement-closed, picks the smallest s in R whose complement is
/// not in R and builds R'(x, y) = R(r_1..r_k) with r_i = x where s_i = 1 and y
/// elsewhere. R 0- and 1-valid: one gadget, R' = {(0,0),(1,1),(1,0)} (claimed
/// as IMPLIES over (y, x)). R neither: two gadgets, delta1 on x and delta0 on y.
/// PreconditionError when R is complement-closed or exactly one of 0-/1-valid.
std::vector<Gadget> from_non_complement_closed(const std::string& name, const Relation& r);

/// Case analysis for a ternary R containing 000, 011, 101 but not 110. The
/// result claims IMPLIES or NAND over {R, delta0}.
Gadget from_ternary_case(const std::string& name, const Relation& r);

/// Implements one of OR, IMPLIES, NAND from a non-affine R and the unary
/// relation delta_pin. pin = 1 runs the pin = 0 construction on the
/// complemented relation and complements the result.
Gadget from_non_affine(const std::string& name, const Relation& r, int pin);

/// NAND(x, z) = IMPLIES(x, y) and XOR(y, z).
Gadget nand_from_implies_xor();

/// R'(x, y) = R2(r_1..r_k) and delta0(u) and delta1(v), with r_i = u, x, y, v
/// for (t_i, t2_i) = 00, 01, 10, 11. For an AND violation the result claims OR
/// when t|t2 is in R2 and XOR otherwise; for an OR violation, NAND when t&t2
/// is in R2 and XOR otherwise.
Gadget or_or_xor_from_im2_violation(const std::string& name, const Relation& r2, const Im2Witness& witness);

}  // namespace sharpcsp
