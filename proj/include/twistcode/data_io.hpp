#pragma once

#include <string>
#include <vector>

#include "twistcode/char_theory.hpp"
#include "twistcode/group.hpp"

namespace twistcode {

/// A group together with its aligned character table.
///
/// Table files carry their own column order plus (order, size) fingerprints;
/// the loader matches file columns to the enumerated group's canonical class
/// order by requiring the declared fundamental row to equal the exact traces
/// of the embedding, class by class. Columns indistinguishable by
/// (order, size, fundamental value) are assigned in file order; any such tie
/// is an outer-automorphism relabel with no computational content.
struct GroupBundle {
    GroupPtr group;
    IrrepTable table;
    std::string fundamental;          // irrep name whose row is the embedding character
    std::vector<int> class_to_column; // canonical class index -> file column
    std::string group_path;
    std::string table_path;

    ClassFunction fundamental_character() const {
        return table.by_name(fundamental).character;
    }
};

/// --data-dir flag beats TWISTCODE_DATA_DIR beats the compiled-in default.
std::string default_data_dir();

/// Load and fully validate a (group file, table file) pair. The table path
/// may be empty, in which case the group file's character_table field is
/// resolved next to the data dir's tables/ directory.
GroupBundle load_bundle(const std::string& group_file, const std::string& table_file = "",
                        const std::string& data_dir = "", long cap = FiniteMatrixGroup::kDefaultCap);

/// Bundled groups by short name ("2I", "sigma360"), cached per process.
/// Anything containing a path separator or .json is treated as a file path.
const GroupBundle& bundled_group(const std::string& name_or_path,
                                 const std::string& data_dir = "");

} // namespace twistcode
