#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pgeom/bounds.hpp"
#include "pgeom/embed.hpp"
#include "pgeom/extremal.hpp"
#include "pgeom/geometry.hpp"

namespace pgeom::io {

/// {"q":..,"p":..,"k":..,"modulus":[..],"ambient":..,"points":[[..],..]}
/// on one line. Coordinates are integer codes, coordinate 0 first; points in
/// index order; modulus highest degree first (empty for prime fields).
std::string geometry_to_json(const Geometry& g);

/// Re-canonicalizes every point. Throws Error(parse_error) on schema errors,
/// Error(duplicate_point) on repeated points, field errors from Field::make.
Geometry geometry_from_json(std::string_view text);

/// {"basis":[..],"map":[[..],..],"point_map":[..]}
std::string witness_to_json(const EmbeddingWitness& w);
EmbeddingWitness witness_from_json(std::string_view text);

/// {"rank":..,"ambient":..,"basis":[[..],..],"points":[[..],..]}
std::string flat_to_json(const ProjectiveSpace& space, const Flat& flat);

/// {"value":..,"status":"exact"|"lower-bound","nodes":..,"witness":{geometry}}
std::string extremal_to_json(const ExtremalResult& r);

/// Header "n,ex,total,density_num,density_den,limit_num,limit_den,status", one line per row.
std::string density_to_csv(const std::vector<DensityRow>& rows);

/// {"kind":"exact","value":"..."} | {"kind":"tower","height":h,"arg":"..."} | {"kind":"over-cap"}
std::string bound_value_to_json(const BoundValue& v);

/// Closed-form binary bound T_c(m + d) with its single-step trace.
std::string closed_form_bound_to_json(const BigInt& m, std::uint64_t c, const Rational& eps, const BoundValue& value);

/// Recursive bound with one trace entry per level, outermost first.
std::string recursive_bound_to_json(int q, const BigInt& m, std::uint64_t c, const Rational& eps,
                                    const RecursiveBound& bound);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pgeom::io
