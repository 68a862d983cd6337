#pragma once

#include <string>

#include "qtutte/bipoly.hpp"
#include "qtutte/qmatroid.hpp"
#include "qtutte/tutte_partition.hpp"

namespace qtutte {

// All writers emit compact JSON with sorted keys. Readers throw kParseError
// on malformed or ill-typed input; matroid ranks are then validated as usual.

// {"k": int, "q": int, "ranks": [int per flat]}
std::string matroid_to_json(const QMatroid& m);
QMatroid matroid_from_json(const std::string& text,
                           const LatticeOptions& options = {});

// {"coeffs": [[entry]], "mode": "numeric"|"symbolic", "q": int,
//  "xdeg": int, "ydeg": int}; coeffs[i][j] multiplies x^i y^j, entries are
// integers (numeric) or coefficient lists (symbolic). "q" only in numeric
// mode.
std::string poly_to_json(const BiPoly& p);
BiPoly poly_from_json(const std::string& text);

// {"parts": [{"clopen", "nu", "rho", "w", "z"}]}. Flats of each part are not
// stored; check_partition rebuilds and validates them.
std::string partition_to_json(const TuttePartition& p);
TuttePartition partition_from_json(const std::string& text, int q);

}  // namespace qtutte
