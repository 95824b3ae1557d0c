#pragma once

#include <string_view>
#include <vector>

namespace aquanim {

// One finite decimal value per line. A first line that does not parse as a
// number is treated as a header. Blank lines are skipped.
// Throws IngestionError naming the 1-based line number of a bad value.
std::vector<double> parse_csv_values(std::string_view text);

}  // namespace aquanim
