#include "qhopf/report.hpp"

#include <sstream>
#include <stdexcept>

#include "qhopf/verify.hpp"

namespace qhopf {

void check_tensor_eq(CheckResult& cr, const Tensor& lhs, const Tensor& rhs,
                     const std::string& witness) {
    ++cr.checked;
    if (lhs == rhs) return;
    Tensor diff = lhs - rhs;
    for (const auto& [key, val] : diff.entries()) {
        std::ostringstream w;
        w << witness << " entry (";
        auto idx = diff.unflatten(key);
        for (std::size_t j = 0; j < idx.size(); ++j) w << (j ? "," : "") << idx[j];
        w << ")";
        cr.violations.push_back({w.str(), lhs.at(idx).str(), rhs.at(idx).str()});
        if (cr.violations.size() >= 8) break;
    }
    if (cr.violations.empty())
        cr.violations.push_back({witness, "<shape>", "<shape>"});
}

std::string Report::text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass() ? "pass" : "FAIL") << "  " << c.name << "  [" << c.checked
           << " checked";
        if (!c.pass()) os << ", " << c.violations.size() << " violations";
        os << "]\n";
        std::size_t shown = 0;
        for (const auto& v : c.violations) {
            if (shown++ == 5) {
                os << "      ...\n";
                break;
            }
            os << "      at " << v.witness << ": lhs = " << v.lhs << ", rhs = " << v.rhs << "\n";
        }
    }
    return os.str();
}

void require_pass(const Report& r, const std::string& context) {
    if (r.pass()) return;
    throw std::runtime_error(context + ": verification failed\n" + r.text());
}

} // namespace qhopf
