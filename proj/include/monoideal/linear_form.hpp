#pragma once

#include <cstddef>
#include <vector>

namespace monoideal {

/// Coefficient-one sum of distinct variables, e.g. x1 + x5 + x2. The support
/// keeps the order in which the terms were written.
class LinearForm {
public:
    /// Throws Errc::domain on an empty support, duplicate or out-of-range index.
    LinearForm(std::vector<std::size_t> support, std::size_t nvars);

    const std::vector<std::size_t>& support() const noexcept { return support_; }
    std::size_t size() const noexcept { return support_.size(); }
    bool involves(std::size_t var) const noexcept;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    std::vector<std::size_t> support_;
};

}  // namespace monoideal
