#pragma once

// JSON input for groupoids and separability data, and JSON output of structure tables.
//
// Groupoid files are either explicit
//   {"arrows":[...], "units":[...], "source":{a:u}, "target":{a:u}, "inverse":{a:a},
//    "compose":[[p,q,pq], ...]}
// or generated: {"generator": {"kind": "pair", "n": 3}}, with kinds
//   pair    {"n": k}
//   group   {"group": G}
//   bundle  {"groups": [G, ...]}
//   union   {"parts": [groupoid, ...]}
//   action  {"group": G, "points": [...], "action": [[g.x index per point], ...]}
// where a group G is {"cyclic": n}, {"symmetric": n} or {"names": [...], "table": [[...]]}.
//
// Separability files:
//   {"name": ..., "B": algebra, "C": algebra, "E": [[b, c, coef], ...],
//    "S_B": [[b, c, coef], ...], "S_C": [[c, b, coef], ...]}
// with algebras {"functions": n}, {"matrices": n}, {"matrices_op": n} or
// {"name": ..., "labels": [...], "mult": [[x, y, z, coef], ...]} (x y contains coef z).
// S_B / S_C entries are (argument, image, coefficient); when absent they are solved from E.
// A generator form is also accepted:
//   {"generator": {"kind": "functions", "n": 3, "tau": [2, 3, 1]}}
//   {"generator": {"kind": "matrices", "y": ["1/3", "2/3"]}}
// Coefficients are integers or strings such as "2/3" or "1-i".

#include "wmha/groupoid.hpp"
#include "wmha/separability.hpp"
#include "wmha/wmha.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace wmha {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path);

Scalar scalar_from_json(const nlohmann::json& j);
std::string scalar_to_json(const Scalar& s);

/// Throws InputError on malformed structure; the groupoid axioms are not checked here.
Groupoid groupoid_from_json(const nlohmann::json& j);
nlohmann::json groupoid_to_json(const Groupoid& g);

SepData sep_from_json(const nlohmann::json& j);
nlohmann::json sep_to_json(const SepData& d);

/// Nonzero structure constants keyed by basis labels.
nlohmann::json tables_to_json(const WmhaTables& t);

}  // namespace wmha
