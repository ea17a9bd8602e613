#pragma once

#include <string>
#include <vector>

#include "turanham/counts.hpp"

namespace turanham {

enum class TableFormat { csv, json, markdown, bfile };
enum class Column { linear, labelled, rotations, all_symmetries };

TableFormat parse_table_format(const std::string& name);  // throws invalid_argument
Column parse_column(const std::string& name);             // accepts "dihedral" for the last column
const ExactInt& column_value(const CountsRecord& rec, Column column);

std::string write_csv(const std::vector<CountsRecord>& records);
std::string write_markdown(const std::vector<CountsRecord>& records);
std::string write_json(const std::vector<CountsRecord>& records);

// OEIS b-file: one "n value" line per record, starting at the first record.
std::string write_bfile(const std::vector<CountsRecord>& records, Column column);

std::string write_table(const std::vector<CountsRecord>& records, TableFormat format,
                        Column bfile_column);

}  // namespace turanham
