#include "monoideal/linear_form.hpp"

#include <algorithm>

#include "monoideal/error.hpp"

namespace monoideal {

LinearForm::LinearForm(std::vector<std::size_t> support, std::size_t nvars) : support_(std::move(support)) {
    if (support_.empty()) throw Error(Errc::domain, "linear form with empty support");
    std::vector<bool> seen(nvars, false);
    for (auto v : support_) {
        if (v >= nvars) throw Error(Errc::domain, "linear form variable out of range");
        if (seen[v]) throw Error(Errc::domain, "repeated variable in linear form");
        seen[v] = true;
    }
}

bool LinearForm::involves(std::size_t var) const noexcept {
    return std::find(support_.begin(), support_.end(), var) != support_.end();
}

}  // namespace monoideal
