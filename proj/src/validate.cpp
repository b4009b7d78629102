#include "panelkit/validate.hpp"

#include <sstream>

#include "panelkit/ecm_design.hpp"

namespace panelkit {

bool ValidationReport::all_usable() const {
    for (const auto& e : entities) {
        if (!e.usable) return false;
    }
    return true;
}

std::string ValidationReport::to_text() const {
    std::ostringstream os;
    os << "Panel validation (minimum usable rows per entity: " << min_required_rows << ")\n";
    for (const auto& e : entities) {
        os << "  " << e.entity << ": " << e.usable_rows
           << (e.usable ? "" : "  [UNUSABLE]") << "\n";
    }
    for (const auto& w : warnings) os << "  warning: " << w << "\n";
    return os.str();
}

ValidationReport validate_panel(const PanelDataset& data, const pmg::ModelSpec& spec) {
    spec.validate();
    ValidationReport report;
    report.min_required_rows = spec.per_group_params() + 1;
    for (std::size_t i = 0; i < data.n_entities(); ++i) {
        EntityUsability e;
        e.entity = data.entities()[i];
        e.usable_rows = pmg::usable_rows(data, spec, i);
        e.usable = e.usable_rows >= report.min_required_rows;
        if (!e.usable) {
            report.warnings.push_back("entity '" + e.entity + "' unusable: " +
                                      std::to_string(e.usable_rows) + " rows, need " +
                                      std::to_string(report.min_required_rows));
        }
        report.entities.push_back(e);
    }
    std::vector<std::string> model_vars;
    model_vars.push_back(spec.dependent);
    model_vars.insert(model_vars.end(), spec.long_run.begin(), spec.long_run.end());
    model_vars.insert(model_vars.end(), spec.short_run_controls.begin(),
                      spec.short_run_controls.end());
    for (const auto& v : model_vars) {
        if (data.n_entities() > 1 && data.cross_section_invariant(v)) {
            report.warnings.push_back("variable '" + v +
                                      "' has no cross-sectional variation (identical across "
                                      "entities); panel statistics treat it as N independent "
                                      "series when there is effectively one");
        }
    }
    return report;
}

}  // namespace panelkit
