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

#include "sharpcsp/classifier.h"

#include "sharpcsp/errors.h"

namespace sharpcsp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ExactPolyTime: return "FP";
    case Verdict::BisEquivalent: return "BIS";
    case Verdict::SatEquivalent: return "SAT";
  }
  return {};
}

Classification classify(const ConstraintLanguage& language) {
  if (language.empty()) throw PreconditionError("cannot classify an empty constraint language");

  Classification out{Verdict::ExactPolyTime, {}, {}, {}, {}, {}};
  const ConstraintLanguage::Entry* non_affine = nullptr;
  const ConstraintLanguage::Entry* non_im2 = nullptr;
  for (const auto& entry : language.entries()) {
    const bool affine = is_affine(entry.second);
    const bool im2 = is_in_im2(entry.second);
    out.per_relation.push_back({entry.first, affine, im2});
    if (!affine && !non_affine) non_affine = &entry;
    if (!im2 && !non_im2) non_im2 = &entry;
  }

  if (!non_affine) return out;

  out.affine_relation = non_affine->first;
  out.affine_evidence = non_affine_witness(non_affine->second);
  if (!non_im2) {
    out.verdict = Verdict::BisEquivalent;
    return out;
  }
  out.verdict = Verdict::SatEquivalent;
  out.im2_relation = non_im2->first;
  out.im2_evidence = im2_witness(non_im2->second);
  return out;
}

}  // namespace sharpcsp
