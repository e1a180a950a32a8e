#ifndef CYLIE_JSON_IO_HPP
#define CYLIE_JSON_IO_HPP

#include "json.hpp"

#include "cylie/hodge_frame.hpp"
#include "cylie/lie_tools.hpp"

namespace cylie {

using json = nlohmann::json;

// Scalar encodings:
//   Rational      "p/q"
//   Gauss         {"re": "p/q", "im": "p/q"}
//   Tower         {"c": ["p/q", "p/q", "p/q", "p/q"]}   on {1, i, s, i s}
//   Poly          [{"coeff": <gauss>, "exps": {"x": 2, ...}}, ...]
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

// {"rows": r, "cols": c, "ring": name, "entries": [scalar...]} row-major.
json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

// {"ordering": ["v30", ...], "q": <mat>}
json frame_to_json(const HodgeFrame& f);

// {"basis": [<mat>...], "chart_coords": [[16 scalars]...]}
json subalgebra_to_json(const Subalgebra& s);

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

}  // namespace cylie

#endif
