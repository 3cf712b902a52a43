#include "golay24/export.hpp"

#include "golay24/billiard_maps.hpp"
#include "golay24/triangle_labeling.hpp"

namespace golay24 {

namespace {

const char* sign_name(SignClass s) {
    return s == SignClass::Positive ? "positive" : "negative";
}

nlohmann::json subset_json(const TriangleSubset& subset) {
    return {{"tag", subset.source.to_string()}, {"members", subset.members},
            {"bits", subset.bits().to_binary_string()}};
}

}  // namespace

nlohmann::json labelings_json() {
    auto quad = build_quadrilateral_labeling();
    nlohmann::json labels = nlohmann::json::array();
    for (int k = 1; k <= 24; ++k) {
        nlohmann::json entry;
        entry["label"] = k;
        entry["sign"] = sign_name(sign_class(k));
        if (k <= 12) {
            const Triangle& t = quad.at(k);
            entry["parity"] = t.parity == BaseParity::Delta1 ? "delta1" : "delta2";
            entry["rep"] = {{t.rep.a(), t.rep.b()}, {t.rep.c(), t.rep.d()}};
        } else {
            entry["parity"] = nullptr;
            entry["rep"] = nullptr;
        }
        labels.push_back(std::move(entry));
    }
    return labels;
}

nlohmann::json permutation_tables_json() {
    auto images = [](const Permutation24& p) {
        nlohmann::json arr = nlohmann::json::array();
        for (int k = 1; k <= 24; ++k) arr.push_back(p(k));
        return arr;
    };
    return {{"sigma", images(sigma())}, {"delta", images(delta())}, {"kappa", images(kappa())}};
}

nlohmann::json subsets_json() {
    nlohmann::json by_label = nlohmann::json::array();
    for (int i = 1; i <= 12; ++i) by_label.push_back(subset_json(subset_for_quad(i)));
    for (int j = 13; j <= 24; ++j) by_label.push_back(subset_json(subset_for_hex(j)));
    return {{"by_label", by_label}, {"r6", subset_json(r6())}, {"r12", subset_json(r12())}};
}

nlohmann::json matrix_json(const GeneratorMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= 12; ++i) rows.push_back(m.row(i).to_binary_string());
    return rows;
}

std::string matrix_text(const GeneratorMatrix& m) {
    std::string out;
    for (int i = 1; i <= 12; ++i) {
        out += m.row(i).to_binary_string();
        out += '\n';
    }
    return out;
}

std::string matrix_csv(const GeneratorMatrix& m) {
    std::string out;
    for (int i = 1; i <= 12; ++i) {
        for (int k = 1; k <= 24; ++k) {
            out += m.row(i).test(k) ? '1' : '0';
            out += k < 24 ? ',' : '\n';
        }
    }
    return out;
}

nlohmann::json bundle_json() {
    return {{"labelings", labelings_json()},
            {"permutations", permutation_tables_json()},
            {"subsets", subsets_json()},
            {"matrix", matrix_json(generating_family())}};
}

nlohmann::json report_json(const Report& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"claim", c.claim}, {"pass", c.pass},
                          {"detail", c.detail}});
    return {{"checks", checks}, {"all_pass", report.all_pass()}};
}

}  // namespace golay24
