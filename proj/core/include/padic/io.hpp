#ifndef PADIC_IO_HPP
#define PADIC_IO_HPP

#include <string>

#include "padic/diffsys.hpp"
#include "padic/domains.hpp"
#include "padic/pseries.hpp"

namespace padic {

/// JSON text interfaces. Parsers throw SchemaError on malformed input;
/// writers emit deterministic output (sorted terms, lowest-term rationals).

PSeries poly_from_json_text(const std::string& text);
std::string poly_to_json_text(const PSeries& f);

LaurentSpec spec_from_json_text(const std::string& text);
std::string spec_to_json_text(const LaurentSpec& spec);

DiffSystem system_from_json_text(const std::string& text);
std::string system_to_json_text(const DiffSystem& sys);

PSeries load_poly(const std::string& path);
LaurentSpec load_spec(const std::string& path);
DiffSystem load_system(const std::string& path);

}  // namespace padic

#endif
