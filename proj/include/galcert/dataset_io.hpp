#pragma once

#include <istream>
#include <string>

#include "galcert/certifier.hpp"
#include "galcert/eigen_data.hpp"

namespace galcert {

// Eigenform dataset files are line oriented. Blank lines and text after '#'
// are ignored; every other line is a key followed by whitespace-separated
// values:
//
//   weight 28
//   level 1
//   defining_poly -59412960 -294086 -1 1      # constant term first
//   assumptions not_maass_spezialform conductor_one
//   eigenvalue 2 4                            # a_2 as a polynomial in alpha
//
// Errors are reported as DatasetError carrying the line number.

EigenformDataset parse_dataset(std::istream& in);
EigenformDataset ingest(const std::string& path);

// Exceptional subgroup tables use the same comment rules:
//
//   prime 7
//   group PGL(2,7) 336

ExceptionalTable parse_exceptional_table(std::istream& in);
ExceptionalTable read_exceptional_table(const std::string& path);

}  // namespace galcert
