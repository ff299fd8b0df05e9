#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace monoideal {

/// Ordered list of variable names of k[x_1, ..., x_n]. The list order is the
/// index order used by every exponent vector. Copies share storage.
class RingSpec {
public:
    explicit RingSpec(std::vector<std::string> names);

    /// prefix1 ... prefixN (or starting at `first`).
    static RingSpec indexed(std::string_view prefix, std::size_t count, std::size_t first = 1);

    std::size_t size() const noexcept { return data_->names.size(); }
    const std::string& name(std::size_t i) const { return data_->names.at(i); }
    const std::vector<std::string>& names() const noexcept { return data_->names; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws Errc::domain for an unknown name.
    std::size_t index(std::string_view name) const;

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.data_ == b.data_ || a.data_->names == b.data_->names;
    }

private:
    struct Data {
        std::vector<std::string> names;
        std::unordered_map<std::string, std::size_t> lookup;
    };
    std::shared_ptr<const Data> data_;
};

bool is_valid_variable_name(std::string_view name) noexcept;

}  // namespace monoideal
