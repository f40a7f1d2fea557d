#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "numeric.hpp"

namespace qnalg {

/// Dimension cache: one versioned JSON document mapping
/// "algebra:n:degree:field" to a decimal dimension string. Writes go through
/// a temp file and an atomic rename; anything unreadable is ignored with a
/// warning and overwritten on the next save.
class dim_cache {
public:
    static constexpr const char* format_version = "1";

    explicit dim_cache(std::string path) : path_(std::move(path)) { load(); }

    static std::string key(const std::string& algebra, int n, int degree, const std::string& field) {
        return algebra + ":" + std::to_string(n) + ":" + std::to_string(degree) + ":" + field;
    }

    std::optional<Int> lookup(const std::string& k) const {
        auto it = entries_.find(k);
        if (it == entries_.end()) return std::nullopt;
        try {
            return Int(it->second);
        } catch (const std::exception&) {
            std::cerr << "warning: cache entry for " << k << " is not an integer, ignoring\n";
            return std::nullopt;
        }
    }

    void store(const std::string& k, const Int& value) {
        auto [it, inserted] = entries_.insert_or_assign(k, to_string(value));
        (void)it;
        dirty_ = true;
    }

    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, std::string>& entries() const { return entries_; }

    void save() {
        if (!dirty_) return;
        nlohmann::json j;
        j["version"] = format_version;
        j["entries"] = nlohmann::json::object();
        for (const auto& [k, v] : entries_) j["entries"][k] = v;
        const std::string tmp = path_ + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) {
                std::cerr << "warning: cannot write cache file " << tmp << "\n";
                return;
            }
            out << j.dump(2) << "\n";
        }
        if (std::rename(tmp.c_str(), path_.c_str()) != 0) {
            std::cerr << "warning: cannot move cache file into place at " << path_ << "\n";
            std::remove(tmp.c_str());
            return;
        }
        dirty_ = false;
    }

private:
    void load() {
        std::ifstream in(path_);
        if (!in) return;  // no cache yet
        nlohmann::json j;
        try {
            in >> j;
            if (!j.is_object() || j.value("version", "") != format_version || !j["entries"].is_object())
                throw std::runtime_error("unexpected layout");
            for (const auto& [k, v] : j["entries"].items()) {
                if (!v.is_string()) throw std::runtime_error("non-string entry");
                entries_[k] = v.get<std::string>();
            }
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring corrupt cache file " << path_ << " (" << e.what() << ")\n";
            entries_.clear();
        }
    }

    std::string path_;
    std::map<std::string, std::string> entries_;
    bool dirty_ = false;
};

}  // namespace qnalg
