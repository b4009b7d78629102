#pragma once

#include <string>
#include <vector>

#include "panelkit/model_spec.hpp"
#include "panelkit/panel.hpp"

namespace panelkit {

struct EntityUsability {
    std::string entity;
    int usable_rows = 0;
    bool usable = false;
};

/// Report-only pre-estimation check: per-entity usable observation counts for
/// a model spec, plus warnings (entities below the threshold, macro series
/// without cross-sectional variation used as panel regressors).
struct ValidationReport {
    int min_required_rows = 0;
    std::vector<EntityUsability> entities;
    std::vector<std::string> warnings;

    bool all_usable() const;
    std::string to_text() const;
};

ValidationReport validate_panel(const PanelDataset& data, const pmg::ModelSpec& spec);

}  // namespace panelkit
