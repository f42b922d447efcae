// Copyright 2026 The matchsym Authors.
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

// Knuth-like moves on matchings: a short chord trades places with the
// vertex next to it. Classes under these moves are exactly the fibers of
// the core map.

#pragma once

#include <cstdint>
#include <vector>

#include "matchsym/matching.hpp"
#include "matchsym/parallel.hpp"
#include "matchsym/symfunc.hpp"

namespace matchsym {

enum class MoveKind { kChordSingleton, kChordChord };

/// One move acting on the consecutive vertices i, i+1, i+2. Moving right
/// takes the short chord from (i,i+1) to (i+1,i+2); moving left undoes it.
/// `partner` is the far end of the displaced chord, or 0 for a singleton.
struct Move {
  MoveKind kind;
  int position;
  int partner;
  bool rightward;
  Matching result;
};

std::vector<Move> moves(const Matching& m);

/// Distinct results of single moves, in enumeration order.
std::vector<Matching> elementary_moves(const Matching& m);

/// Closure of {m} under moves, in enumeration order.
std::vector<Matching> equivalence_class(const Matching& m);

/// All classes of M_{N,f}, each sorted, ordered by their first element.
std::vector<std::vector<Matching>> equivalence_classes(int n, int f);

/// True when every move out of the set stays in it.
bool is_closed_under_moves(const std::vector<Matching>& set);

/// Shifts vertices >= i up by two and adds the chord (i, i+1).
/// Throws std::out_of_range unless 1 <= i <= N+1.
Matching insert_short_chord(const Matching& m, int i);

/// Positions i_1, ..., i_k with insrt_{i_k}(... insrt_{i_1}(core(m))) = m.
std::vector<int> insertion_witness(const Matching& m);

/// Schur expansion of the class under Short. Throws std::invalid_argument
/// for an empty set, mixed sizes, or a set not closed under moves.
SchurExpansion class_generating_function(const std::vector<Matching>& cls);

}  // namespace matchsym
