// Copyright 2026 The tqftkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "tqft/cob_term.hpp"

namespace tqft {

/// A connected component touching the boundary. Port lists hold global
/// boundary indices in ascending order.
struct SurfaceComponent {
  std::vector<int> inputs;
  std::vector<int> outputs;
  int genus = 0;

  friend auto operator<=>(const SurfaceComponent& a, const SurfaceComponent& b) {
    if (auto c = a.inputs.size() <=> b.inputs.size(); c != 0) return c;
    if (auto c = a.outputs.size() <=> b.outputs.size(); c != 0) return c;
    if (auto c = a.genus <=> b.genus; c != 0) return c;
    if (auto c = a.inputs <=> b.inputs; c != 0) return c;
    return a.outputs <=> b.outputs;
  }
  friend bool operator==(const SurfaceComponent&, const SurfaceComponent&) = default;
};

/// Topological classification of a cobordism: its boundary-touching
/// components with their wiring, plus the genera of closed components.
/// Components are kept in canonical order, so equality of NormalForms is
/// equivalence of the cobordisms.
struct NormalForm {
  int in_arity = 0;
  int out_arity = 0;
  std::vector<SurfaceComponent> components;
  std::vector<int> closed_genera;

  /// Component index attached to each global input / output circle.
  std::vector<int> input_component() const;
  std::vector<int> output_component() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Euler characteristic carried by one generator (twist counts its two cylinders).
int euler_characteristic(Generator g) noexcept;

/// Union-find over the wires of the term; genus of each component from
/// chi = 2 - 2g - b with chi summed over generators.
NormalForm normalize(const CobTerm& f);

/// Cobordism equivalence via normal forms.
bool equivalent(const CobTerm& f, const CobTerm& g);

/// A term whose normal form is `nf`: per component a multiplication tree,
/// `genus` handles and a comultiplication tree, placed side by side and wired
/// to the global ports with twist layers.
CobTerm rebuild_term(const NormalForm& nf);

/// Connected cobordism with `inputs` and `outputs` circles and `genus` handles.
CobTerm connected_term(int inputs, int outputs, int genus);

/// Realizes a wire permutation on n >= 1 wires with adjacent twists:
/// the wire entering at position i leaves at position target[i].
CobTerm permutation_term(const std::vector<int>& target);

/// Line-oriented rendering used by the CLI.
std::string format_normal_form(const NormalForm& nf);

}  // namespace tqft
