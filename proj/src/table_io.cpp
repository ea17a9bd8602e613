#include "turanham/table_io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace turanham {

TableFormat parse_table_format(const std::string& name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    if (name == "markdown") return TableFormat::markdown;
    if (name == "bfile") return TableFormat::bfile;
    throw std::invalid_argument("unknown table format '" + name + "'");
}

Column parse_column(const std::string& name) {
    if (name == "linear") return Column::linear;
    if (name == "labelled") return Column::labelled;
    if (name == "rotations") return Column::rotations;
    if (name == "all_symmetries" || name == "dihedral") return Column::all_symmetries;
    throw std::invalid_argument("unknown column '" + name + "'");
}

const ExactInt& column_value(const CountsRecord& rec, Column column) {
    switch (column) {
        case Column::linear: return rec.linear;
        case Column::labelled: return rec.labelled;
        case Column::rotations: return rec.rotations;
        case Column::all_symmetries: return rec.all_symmetries;
    }
    throw std::logic_error("unreachable column");
}

std::string write_csv(const std::vector<CountsRecord>& records) {
    std::ostringstream out;
    out << "n,linear,labelled,rotations,all_symmetries\n";
    for (const CountsRecord& rec : records) {
        out << rec.n << ',' << rec.linear.str() << ',' << rec.labelled.str() << ','
            << rec.rotations.str() << ',' << rec.all_symmetries.str() << '\n';
    }
    return out.str();
}

std::string write_markdown(const std::vector<CountsRecord>& records) {
    std::ostringstream out;
    out << "| n | linear | labelled | rotations | all_symmetries |\n";
    out << "|---|--------|----------|-----------|----------------|\n";
    for (const CountsRecord& rec : records) {
        out << "| " << rec.n << " | " << rec.linear.str() << " | " << rec.labelled.str() << " | "
            << rec.rotations.str() << " | " << rec.all_symmetries.str() << " |\n";
    }
    return out.str();
}

std::string write_json(const std::vector<CountsRecord>& records) {
    nlohmann::json doc = nlohmann::json::array();
    for (const CountsRecord& rec : records) {
        doc.push_back({
            {"d", rec.d},
            {"n", rec.n},
            {"linear", rec.linear.str()},
            {"labelled", rec.labelled.str()},
            {"rotations", rec.rotations.str()},
            {"all_symmetries", rec.all_symmetries.str()},
        });
    }
    return doc.dump(2) + "\n";
}

std::string write_bfile(const std::vector<CountsRecord>& records, Column column) {
    std::ostringstream out;
    for (const CountsRecord& rec : records) {
        out << rec.n << ' ' << column_value(rec, column).str() << '\n';
    }
    return out.str();
}

std::string write_table(const std::vector<CountsRecord>& records, TableFormat format,
                        Column bfile_column) {
    switch (format) {
        case TableFormat::csv: return write_csv(records);
        case TableFormat::json: return write_json(records);
        case TableFormat::markdown: return write_markdown(records);
        case TableFormat::bfile: return write_bfile(records, bfile_column);
    }
    throw std::logic_error("unreachable format");
}

}  // namespace turanham
