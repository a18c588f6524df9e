#pragma once

#include <cctype>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qhd/errors.hpp"

namespace qhd {

// A scalar parameter (q, h, eta, ...). Symbols are interned in a process-wide
// append-only registry; the registration index doubles as the position in the
// global term order, so it is total and stable for the process lifetime.
class Symbol {
  public:
    Symbol() : index_(0) {}

    static Symbol intern(const std::string& name);
    static Symbol intern_index(std::size_t index) { return Symbol(index); }
    static bool is_valid_name(const std::string& name);

    std::size_t index() const { return index_; }
    std::string name() const;

    friend bool operator==(Symbol a, Symbol b) { return a.index_ == b.index_; }
    friend bool operator!=(Symbol a, Symbol b) { return a.index_ != b.index_; }
    friend bool operator<(Symbol a, Symbol b) { return a.index_ < b.index_; }

  private:
    explicit Symbol(std::size_t i) : index_(i) {}

    struct Registry {
        std::mutex mutex;
        std::vector<std::string> names{"_0"}; // index 0 reserved
        std::unordered_map<std::string, std::size_t> lookup;
    };
    static Registry& registry() {
        static Registry r;
        return r;
    }

    std::size_t index_;
};

inline bool Symbol::is_valid_name(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline Symbol Symbol::intern(const std::string& name) {
    if (!is_valid_name(name)) throw error("invalid symbol name: '" + name + "'");
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mutex);
    auto it = r.lookup.find(name);
    if (it != r.lookup.end()) return Symbol(it->second);
    std::size_t idx = r.names.size();
    r.names.push_back(name);
    r.lookup.emplace(name, idx);
    return Symbol(idx);
}

inline std::string Symbol::name() const {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mutex);
    return r.names.at(index_);
}

inline Symbol sym(const std::string& name) { return Symbol::intern(name); }

} // namespace qhd
