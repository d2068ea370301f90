#ifndef CUBESUM_CATALOG_HPP
#define CUBESUM_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubesum/multiset.hpp"

namespace cubesum {

// One discovered CS-set with provenance. Persisted as JSON Lines with all
// integers as decimal strings (Pell-derived entries exceed 64 bits, and
// JSON number consumers are not to be trusted with that).
struct CatalogRecord {
    CsSet set;
    std::vector<std::string> tags;
    std::string source;

    std::string to_json_line() const;
    static CatalogRecord from_json_line(const std::string& line,
                                        std::size_t line_number);
};

enum class AddOutcome { added, duplicate };

struct CatalogFilter {
    std::optional<std::size_t> n;
    std::optional<std::string> tag;
    std::optional<Int> sum;
    bool zero_sum_only = false;
};

class Catalog {
public:
    Catalog() = default;

    // Dedupe key is the canonical entries list; tags merge on duplicates.
    AddOutcome add(CatalogRecord record);

    // Matching records in canonical-entry lexicographic order.
    std::vector<CatalogRecord> query(const CatalogFilter& filter) const;

    std::size_t size() const { return records_.size(); }
    const std::vector<CatalogRecord>& records() const { return records_; }

    // Every record re-verifies on load; a corrupt or non-verifying line
    // raises CatalogError with its line number, never a silent skip.
    static Catalog load(const std::string& path);
    void save(const std::string& path) const;

private:
    std::vector<CatalogRecord> records_;
};

} // namespace cubesum

#endif
