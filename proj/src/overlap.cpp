#include "scldpc/overlap.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace scldpc {

namespace {

bool sorted_unique(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

bool residues_distinct(const std::vector<int>& v, int gamma) {
    for (size_t a = 0; a < v.size(); ++a)
        for (size_t b = a + 1; b < v.size(); ++b)
            if (v[a] % gamma == v[b] % gamma) return false;
    return true;
}

void check_key(const std::vector<int>& rows, int gamma, const char* who) {
    if (!sorted_unique(rows))
        throw std::invalid_argument(std::string(who) + ": index set must be sorted and duplicate-free");
    for (int r : rows)
        if (r < 0 || r >= 3 * gamma)
            throw std::out_of_range(std::string(who) + ": row index outside 0..3*gamma-1");
}

std::string key_string(const std::vector<int>& rows) {
    std::string s;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(rows[i]);
    }
    return s;
}

}  // namespace

StackedProtograph build_pi(const PartitioningMatrix& pm) {
    if (pm.memory() != 1)
        throw std::invalid_argument("build_pi: stacked protograph is defined for m=1 only");
    const int gamma = pm.gamma();
    StackedProtograph pi(gamma, pm.kappa());
    for (int i = 0; i < gamma; ++i) {
        for (int j = 0; j < pm.kappa(); ++j) {
            int lab = pm.label(i, j);
            int block = (lab == PartitioningMatrix::kDummy) ? 2 : lab;
            pi.set(block * gamma + i, j, true);
        }
    }
    return pi;
}

long long overlap(const StackedProtograph& pi, const std::vector<int>& rows) {
    if (rows.empty()) throw std::invalid_argument("overlap: row set must be non-empty");
    for (int r : rows)
        if (r < 0 || r >= 3 * pi.gamma())
            throw std::out_of_range("overlap: row index outside 0..3*gamma-1");
    long long t = 0;
    for (int c = 0; c < pi.kappa(); ++c) {
        bool all = true;
        for (int r : rows)
            if (!pi.get(r, c)) {
                all = false;
                break;
            }
        t += all;
    }
    return t;
}

OverlapParameterTable OverlapParameterTable::from_stacked(const StackedProtograph& pi) {
    const int gamma = pi.gamma();
    OverlapParameterTable table(gamma, pi.kappa());
    table.source_ = pi;

    // All distinct-residue sets over the free rows, up to size 3. Larger sets
    // are rare (only size-4+ expansion targets reach them) and are counted
    // from the retained stack on demand.
    const int max_size = std::min(gamma, 3);
    std::vector<int> idx;
    auto emit = [&](auto&& self, int next) -> void {
        if (!idx.empty()) table.set(idx, overlap(pi, idx));
        if (static_cast<int>(idx.size()) == max_size) return;
        for (int r = next; r < 3 * gamma; ++r) {
            bool clash = false;
            for (int q : idx)
                if (q % gamma == r % gamma) clash = true;
            if (clash) continue;
            idx.push_back(r);
            self(self, r + 1);
            idx.pop_back();
        }
    };
    emit(emit, gamma);
    return table;
}

void OverlapParameterTable::set(const std::vector<int>& rows, long long value) {
    check_key(rows, gamma_, "OverlapParameterTable::set");
    if (rows.empty())
        throw std::invalid_argument("OverlapParameterTable::set: empty set is fixed at kappa");
    if (!residues_distinct(rows, gamma_))
        throw std::invalid_argument(
            "OverlapParameterTable::set: set with repeated residue mod gamma is identically 0");
    if (value < 0) throw std::invalid_argument("OverlapParameterTable::set: negative overlap");
    entries_[rows] = value;
}

long long OverlapParameterTable::resolve(const std::vector<int>& rows) const {
    check_key(rows, gamma_, "OverlapParameterTable::resolve");
    if (rows.empty()) return kappa_;
    if (!residues_distinct(rows, gamma_)) return 0;
    if (auto it = entries_.find(rows); it != entries_.end()) return it->second;

    std::vector<int> low, high;
    for (int r : rows) (r < gamma_ ? low : high).push_back(r);

    if (low.empty()) {
        if (source_) return overlap(*source_, rows);
        throw UnresolvableOverlap("overlap parameter t_{" + key_string(rows) +
                                  "} is not in the table");
    }

    // Inclusion-exclusion over the ways the low rows' circulants could instead
    // sit in the coupled or dummy block.
    long long value = resolve(high);
    const int d1 = static_cast<int>(low.size());
    for (unsigned mask = 1; mask < (1u << d1); ++mask) {
        std::vector<int> chosen;
        for (int b = 0; b < d1; ++b)
            if (mask & (1u << b)) chosen.push_back(low[b]);
        const int alpha = static_cast<int>(chosen.size());
        const long long sign = (alpha % 2) ? -1 : 1;
        for (unsigned xs = 0; xs < (1u << alpha); ++xs) {
            std::vector<int> key = high;
            for (int b = 0; b < alpha; ++b) {
                int x = (xs & (1u << b)) ? 2 : 1;
                key.push_back(x * gamma_ + chosen[b]);
            }
            std::sort(key.begin(), key.end());
            value += sign * resolve(key);
        }
    }
    return value;
}

std::string OverlapParameterTable::to_json() const {
    nlohmann::json j;
    j["gamma"] = gamma_;
    j["kappa"] = kappa_;
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [key, value] : entries_) entries[key_string(key)] = value;
    j["entries"] = entries;
    return j.dump(2);
}

OverlapParameterTable OverlapParameterTable::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    OverlapParameterTable table(j.at("gamma").get<int>(), j.at("kappa").get<int>());
    for (const auto& [key, value] : j.at("entries").items()) {
        std::vector<int> rows;
        size_t pos = 0;
        while (pos < key.size()) {
            size_t comma = key.find(',', pos);
            if (comma == std::string::npos) comma = key.size();
            rows.push_back(std::stoi(key.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        table.set(rows, value.get<long long>());
    }
    return table;
}

std::vector<std::vector<int>> enumerate_ndi(int gamma) {
    if (gamma < 1) throw std::invalid_argument("enumerate_ndi: gamma must be >= 1");
    std::vector<std::vector<int>> out;
    for (int size = 1; size <= gamma; ++size) {
        std::vector<int> idx;
        auto rec = [&](auto&& self, int next) -> void {
            if (static_cast<int>(idx.size()) == size) {
                bool all_dummy = std::all_of(idx.begin(), idx.end(),
                                             [&](int r) { return r >= 2 * gamma; });
                if (!all_dummy) out.push_back(idx);
                return;
            }
            for (int r = next; r < 3 * gamma; ++r) {
                bool clash = false;
                for (int q : idx)
                    if (q % gamma == r % gamma) clash = true;
                if (clash) continue;
                idx.push_back(r);
                self(self, r + 1);
                idx.pop_back();
            }
        };
        rec(rec, gamma);
    }
    return out;
}

long long expand_dependent(const std::vector<int>& target, const OverlapParameterTable& table,
                           int kappa, int gamma) {
    if (table.gamma() != gamma || table.kappa() != kappa)
        throw std::invalid_argument("expand_dependent: table parameters disagree with gamma/kappa");
    std::vector<int> key = target;
    std::sort(key.begin(), key.end());
    return table.resolve(key);
}

}  // namespace scldpc
