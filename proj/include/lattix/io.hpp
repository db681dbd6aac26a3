#pragma once

#include "lattix/construct.hpp"
#include "lattix/energy.hpp"
#include "lattix/fit.hpp"
#include "lattix/structure.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lattix::io {

// Points files hold one "x y" pair of serialized Numbers per line; the set of
// points must form a Cartesian product. Lines files hold "S <slope> <c>" for
// y = slope*x + c or "V <c>" for x = c. Set files hold one Number per line.

std::string write_points(const ProductSet& points);
ProductSet parse_points(const std::string& text);

std::string write_lines(const std::vector<Line>& lines);
std::vector<Line> parse_lines(const std::string& text);

std::string write_set(const NumberSet& set);
NumberSet parse_set(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

nlohmann::json to_json(const EnergyReport& report);
nlohmann::json to_json(const StructureReport& report);
nlohmann::json to_json(const ConstructManifest& manifest);
nlohmann::json to_json(const FitResult& fit);

// One CSV row per family: the analyze --csv format.
std::string families_csv(const StructureReport& report);

} // namespace lattix::io
