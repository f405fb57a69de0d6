#ifndef PICKSPACE_JSON_IO_HPP
#define PICKSPACE_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "pickspace/kernels.hpp"
#include "pickspace/polynomial.hpp"
#include "pickspace/spaces.hpp"

namespace pickspace {

using Json = nlohmann::ordered_json;

/// Polynomial <-> list of {"exponents": [...], "re": x, "im": y} records,
/// emitted in graded-lexicographic order.
Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j, int expected_dim = -1);

Json space_to_json(const SpaceSpec& s);
SpaceSpec space_from_json(const Json& j);

Json pointset_to_json(const PointSet& pts);
PointSet pointset_from_json(const Json& j);

/// Accepts JSON inline or shorthand names:
///   da:<d>  hardy:<d>  dirichlet  bergman:<d>  besov:<d>:<s>[:<a>]
SpaceSpec parse_space_arg(const std::string& arg);

/// Accepts JSON {"kind": ..., ...} or shorthand:
///   da:<d>  szego  dirichlet  power:<d>:<beta>
KernelSpec parse_kernel_arg(const std::string& arg);

/// Polynomial from either an expression string or a JSON record list.
Polynomial parse_poly_arg(const std::string& arg, int dim);

}  // namespace pickspace

#endif
