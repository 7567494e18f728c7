#pragma once

#include "fairseq/assignment.hpp"
#include "fairseq/conditions.hpp"
#include "fairseq/search.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace fairseq {

inline constexpr const char *kToolVersion = "fairseq 0.1.0";

/// Parse failure with a position: line is 1-based, field is the 1-based
/// column within the line (0 when not applicable).
struct ParseError : std::runtime_error {
    int line;
    int field;
    ParseError(int line_, int field_, const std::string &msg);
};

/// JSON form: {"n": int, "days": [[int,...],...]}, day-major
/// (days[t-1][i-1] = item for player i on day t).
RepeatedAssignment parse_sequence_json(const std::string &text);
std::string sequence_to_json(const RepeatedAssignment &seq);

/// CSV form: the printed-table orientation, rows = players, columns = days,
/// comma-separated, no header; n is the number of rows.
RepeatedAssignment parse_sequence_csv(const std::string &text);
std::string sequence_to_csv(const RepeatedAssignment &seq);

/// Dispatches on the .json / .csv extension.
RepeatedAssignment load_sequence(const std::filesystem::path &path);
void save_sequence(const std::filesystem::path &path,
                   const RepeatedAssignment &seq);

/// Flat directory of per-(n, kind) JSON search records, append-only:
/// an existing record is never overwritten in place, a numbered sibling is
/// written instead. Witnesses are re-verified on load.
class ResultStore {
  public:
    explicit ResultStore(std::filesystem::path dir);

    std::filesystem::path save(const SearchConfig &cfg,
                               const SearchOutcome &outcome) const;

    struct Record {
        SearchConfig config;
        SearchStatus status;
        std::optional<RepeatedAssignment> witness;
        std::uint64_t nodes = 0;
        double elapsed_seconds = 0;
        std::string tool_version;
    };

    /// Loads the base record for (n, kind); throws std::runtime_error if a
    /// stored Sat witness fails re-verification.
    std::optional<Record> load(int n, ConditionKind kind) const;

    const std::filesystem::path &dir() const { return dir_; }

  private:
    std::filesystem::path dir_;
};

} // namespace fairseq
