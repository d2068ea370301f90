// JSON Lines persistence for discovered CS-sets. Integers travel as
// decimal strings: Pell-derived entries exceed 64 bits and JSON number
// consumers quietly round them.

#include "cubesum/catalog.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace cubesum {

using nlohmann::json;

std::string CatalogRecord::to_json_line() const {
    json j;
    json entries = json::array();
    for (const Int& e : set.elements().entries()) entries.push_back(e.str());
    j["entries"] = std::move(entries);
    j["n"] = set.size();
    j["sum"] = set.sum().str();
    j["cube_sum"] = set.cube_sum().str();
    j["tags"] = tags;
    j["source"] = source;
    return j.dump();
}

CatalogRecord CatalogRecord::from_json_line(const std::string& line,
                                            std::size_t line_number) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw CatalogError(line_number, e.what());
    }
    try {
        std::vector<Int> values;
        for (const auto& item : j.at("entries"))
            values.push_back(parse_int(item.get<std::string>()));
        CsSet set = verify_cs(canonicalize(std::move(values)));

        if (j.at("n").get<std::size_t>() != set.size())
            throw CsError("n field disagrees with entries");
        if (parse_int(j.at("sum").get<std::string>()) != set.sum())
            throw CsError("sum field disagrees with entries");
        if (parse_int(j.at("cube_sum").get<std::string>()) != set.cube_sum())
            throw CsError("cube_sum field disagrees with entries");

        CatalogRecord record{std::move(set), {}, {}};
        record.tags = j.at("tags").get<std::vector<std::string>>();
        record.source = j.at("source").get<std::string>();
        return record;
    } catch (const NotCs& e) {
        throw VerificationFailed("catalog line " + std::to_string(line_number) +
                                 ": " + e.what());
    } catch (const Inadmissible& e) {
        throw VerificationFailed("catalog line " + std::to_string(line_number) +
                                 ": " + e.what());
    } catch (const CatalogError&) {
        throw;
    } catch (const std::exception& e) {
        throw CatalogError(line_number, e.what());
    }
}

AddOutcome Catalog::add(CatalogRecord record) {
    for (CatalogRecord& existing : records_) {
        if (existing.set == record.set) {
            for (const std::string& tag : record.tags)
                if (std::find(existing.tags.begin(), existing.tags.end(), tag) ==
                    existing.tags.end())
                    existing.tags.push_back(tag);
            return AddOutcome::duplicate;
        }
    }
    records_.push_back(std::move(record));
    return AddOutcome::added;
}

std::vector<CatalogRecord> Catalog::query(const CatalogFilter& filter) const {
    std::vector<CatalogRecord> out;
    for (const CatalogRecord& r : records_) {
        if (filter.n && r.set.size() != *filter.n) continue;
        if (filter.tag && std::find(r.tags.begin(), r.tags.end(), *filter.tag) ==
                              r.tags.end())
            continue;
        if (filter.sum && r.set.sum() != *filter.sum) continue;
        if (filter.zero_sum_only && !r.set.zero_sum()) continue;
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [](const CatalogRecord& a, const CatalogRecord& b) {
        return a.set < b.set;
    });
    return out;
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CsError("cannot open catalog file: " + path);
    Catalog catalog;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        catalog.add(CatalogRecord::from_json_line(line, line_number));
    }
    return catalog;
}

void Catalog::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw CsError("cannot write catalog file: " + path);
    for (const CatalogRecord& r : records_) out << r.to_json_line() << '\n';
}

} // namespace cubesum
