// Command-line front end: derives the labelings, tables, subsets, and the
// generator matrix; verifies every structural claim; exports artifacts; and
// encodes/decodes 24-bit words.
//
// Exit codes: 0 success, 1 verification failure (or an uncorrectable
// received word), 2 usage or parse error, 3 I/O failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "golay24/billiard_maps.hpp"
#include "golay24/export.hpp"
#include "golay24/f2_code.hpp"
#include "golay24/golay_construction.hpp"
#include "golay24/triangle_labeling.hpp"
#include "golay24/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed for " + path);
}

std::string output_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("GOLAY24_OUTPUT_DIR"); env && *env) return env;
    return ".";
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

const char* parity_name(golay24::BaseParity p) {
    return p == golay24::BaseParity::Delta1 ? "delta1" : "delta2";
}

const char* sign_name(int label) {
    return golay24::sign_class(label) == golay24::SignClass::Positive ? "positive" : "negative";
}

std::string labelings_text() {
    auto quad = golay24::build_quadrilateral_labeling();
    std::string out = "label parity sign rep\n";
    for (int k = 1; k <= 24; ++k) {
        out += std::to_string(k);
        if (k <= 12) {
            const auto& t = quad.at(k);
            out += std::string(" ") + parity_name(t.parity) + " " + sign_name(k) + " " +
                   t.rep.to_string();
        } else {
            out += std::string(" - ") + sign_name(k) + " -";
        }
        out += '\n';
    }
    return out;
}

std::string permutations_text(char sep) {
    std::string out = sep == ',' ? "label,sigma,delta,kappa\n" : "label sigma delta kappa\n";
    for (int k = 1; k <= 24; ++k) {
        out += std::to_string(k);
        for (const auto* p : {&golay24::sigma(), &golay24::delta(), &golay24::kappa()}) {
            out += sep;
            out += std::to_string((*p)(k));
        }
        out += '\n';
    }
    return out;
}

std::string subsets_text(char sep) {
    auto line = [&](const golay24::TriangleSubset& s) {
        std::string out = s.source.to_string();
        for (int m : s.members) {
            out += sep;
            out += std::to_string(m);
        }
        return out + "\n";
    };
    std::string out;
    for (int i = 1; i <= 12; ++i) out += line(golay24::subset_for_quad(i));
    for (int j = 13; j <= 24; ++j) out += line(golay24::subset_for_hex(j));
    out += line(golay24::r6());
    out += line(golay24::r12());
    return out;
}

std::string labelings_csv() {
    auto quad = golay24::build_quadrilateral_labeling();
    std::string out = "label,parity,sign,a,b,c,d\n";
    for (int k = 1; k <= 24; ++k) {
        out += std::to_string(k) + ",";
        if (k <= 12) {
            const auto& t = quad.at(k);
            out += std::string(parity_name(t.parity)) + "," + sign_name(k) + "," +
                   std::to_string(t.rep.a()) + "," + std::to_string(t.rep.b()) + "," +
                   std::to_string(t.rep.c()) + "," + std::to_string(t.rep.d());
        } else {
            out += std::string(",") + sign_name(k) + ",,,,";
        }
        out += '\n';
    }
    return out;
}

int run_derive(const std::string& dir_flag, const std::string& format, bool with_syndrome_table) {
    const std::string dir = output_dir(dir_flag);
    auto path = [&](const std::string& name) { return dir + "/" + name; };
    const auto matrix = golay24::generating_family();
    if (format == "json") {
        write_file(path("golay24.json"), json_text(golay24::bundle_json()));
    } else if (format == "text") {
        write_file(path("labelings.txt"), labelings_text());
        write_file(path("permutations.txt"), permutations_text(' '));
        write_file(path("subsets.txt"), subsets_text(' '));
        write_file(path("matrix.txt"), golay24::matrix_text(matrix));
    } else {
        write_file(path("labelings.csv"), labelings_csv());
        write_file(path("permutations.csv"), permutations_text(','));
        write_file(path("subsets.csv"), subsets_text(','));
        write_file(path("matrix.csv"), golay24::matrix_csv(matrix));
    }
    if (with_syndrome_table) {
        auto code = golay24::LinearCode::from_generator(matrix);
        std::ofstream out(path("syndrome_table.bin"), std::ios::binary);
        if (!out) throw IoError("cannot open " + path("syndrome_table.bin") + " for writing");
        code.dump_syndrome_table(out);
        out.flush();
        if (!out) throw IoError("write failed for " + path("syndrome_table.bin"));
    }
    return kExitOk;
}

int run_verify(bool as_json) {
    auto report = golay24::run_full_verification();
    if (as_json) {
        std::cout << json_text(golay24::report_json(report));
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " — " << c.claim;
            if (!c.pass && !c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << "\n";
        }
        std::cout << (report.all_pass() ? "all checks passed" : "some checks FAILED") << " ("
                  << report.checks.size() << " checks)\n";
    }
    return report.all_pass() ? kExitOk : kExitVerifyFail;
}

int run_matrix(const std::string& format, const std::string& output) {
    const auto matrix = golay24::generating_family();
    std::string content;
    if (format == "json")
        content = json_text(golay24::matrix_json(matrix));
    else if (format == "csv")
        content = golay24::matrix_csv(matrix);
    else
        content = golay24::matrix_text(matrix);
    if (output.empty())
        std::cout << content;
    else
        write_file(output, content);
    return kExitOk;
}

int run_weights(bool as_json) {
    auto code = golay24::LinearCode::from_generator(golay24::generating_family());
    auto we = code.weight_enumerator();
    if (as_json) {
        nlohmann::json j;
        j["counts"] = we.counts;
        std::cout << json_text(j);
    } else {
        for (int w = 0; w <= 24; ++w)
            if (we.counts[static_cast<std::size_t>(w)] != 0)
                std::cout << w << " " << we.counts[static_cast<std::size_t>(w)] << "\n";
    }
    return kExitOk;
}

int run_report(bool as_json) {
    auto code = golay24::LinearCode::from_generator(golay24::generating_family());
    auto we = code.weight_enumerator();
    auto dual = golay24::macwilliams_dual(we, 24, code.rank());
    int dual_distance = 0;
    for (int w = 1; w <= 24 && dual_distance == 0; ++w)
        if (dual[static_cast<std::size_t>(w)] != 0) dual_distance = w;
    if (as_json) {
        nlohmann::json j;
        j["length"] = code.length();
        j["rank"] = code.rank();
        j["min_distance"] = code.min_distance();
        j["dual_distance"] = dual_distance;
        j["self_dual"] = code.is_self_dual();
        j["doubly_even"] = code.is_doubly_even();
        j["golay24"] = code.is_golay24();
        j["information_positions"] = code.information_positions();
        j["weight_counts"] = we.counts;
        std::cout << json_text(j);
    } else {
        std::cout << "length        " << code.length() << "\n"
                  << "rank          " << code.rank() << "\n"
                  << "min distance  " << code.min_distance() << "\n"
                  << "dual distance " << dual_distance << "\n"
                  << "self-dual     " << (code.is_self_dual() ? "yes" : "no") << "\n"
                  << "doubly even   " << (code.is_doubly_even() ? "yes" : "no") << "\n"
                  << "Golay G24     " << (code.is_golay24() ? "yes" : "no") << "\n";
        std::cout << "info positions";
        for (int p : code.information_positions()) std::cout << " " << p;
        std::cout << "\nweights";
        for (int w = 0; w <= 24; ++w)
            if (we.counts[static_cast<std::size_t>(w)] != 0)
                std::cout << " " << w << ":" << we.counts[static_cast<std::size_t>(w)];
        std::cout << "\n";
    }
    return kExitOk;
}

bool parse_hex(const std::string& s, std::size_t digits, std::uint32_t& value) {
    if (s.size() != digits) return false;
    value = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            d = c - 'A' + 10;
        else
            return false;
        value = value << 4 | static_cast<std::uint32_t>(d);
    }
    return true;
}

int run_encode(const std::string& hex) {
    std::uint32_t info;
    if (!parse_hex(hex, 3, info)) {
        std::cerr << "encode: expected 3 hex digits, got '" << hex << "'\n";
        return kExitUsage;
    }
    auto code = golay24::LinearCode::from_generator(golay24::generating_family());
    std::cout << code.encode(static_cast<std::uint16_t>(info)).to_hex() << "\n";
    return kExitOk;
}

int run_decode(const std::string& hex, bool as_json) {
    std::uint32_t raw;
    if (!parse_hex(hex, 6, raw)) {
        std::cerr << "decode: expected 6 hex digits, got '" << hex << "'\n";
        return kExitUsage;
    }
    auto code = golay24::LinearCode::from_generator(golay24::generating_family());
    auto result = code.decode(golay24::BitString24::from_hex(hex));
    const char* status = result.status == golay24::DecodeStatus::Clean ? "clean"
                         : result.status == golay24::DecodeStatus::Corrected
                             ? "corrected"
                             : "detected-uncorrectable";
    char info_hex[4];
    std::snprintf(info_hex, sizeof info_hex, "%03x", result.info);
    if (as_json) {
        nlohmann::json j;
        j["status"] = status;
        j["codeword"] = result.codeword.to_hex();
        j["info"] = info_hex;
        j["error_positions"] = result.error_positions;
        std::cout << json_text(j);
    } else {
        std::cout << "status   " << status << "\n"
                  << "codeword " << result.codeword.to_hex() << "\n"
                  << "info     " << info_hex << "\n"
                  << "errors   " << result.error_positions.size();
        for (int p : result.error_positions) std::cout << " " << p;
        std::cout << "\n";
    }
    return result.status == golay24::DecodeStatus::DetectedUncorrectable ? kExitVerifyFail
                                                                         : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary Golay code derived from the triangle decompositions of the "
                 "commutator-subgroup fundamental domains"};
    app.require_subcommand(1);

    std::string derive_dir, derive_format = "json";
    bool derive_syndrome = false;
    auto* derive = app.add_subcommand("derive", "write labelings, tables, subsets, and matrix");
    derive->add_option("--output", derive_dir, "output directory (default $GOLAY24_OUTPUT_DIR or .)");
    derive->add_option("--format", derive_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    derive->add_flag("--syndrome-table", derive_syndrome,
                     "also write the binary syndrome table (syndrome_table.bin)");

    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run every structural check");
    verify->add_flag("--json", verify_json, "machine-readable report");

    std::string matrix_format = "text", matrix_output;
    auto* matrix = app.add_subcommand("matrix", "print the 12x24 generator matrix");
    matrix->add_option("--format", matrix_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    matrix->add_option("--output", matrix_output, "write to a file instead of stdout");

    bool weights_json = false;
    auto* weights = app.add_subcommand("weights", "print the weight distribution");
    weights->add_flag("--json", weights_json, "machine-readable output");

    bool report_flag_json = false;
    auto* report = app.add_subcommand("report", "code audit: parameters and certificates");
    report->add_flag("--json", report_flag_json, "machine-readable output");

    std::string encode_hex;
    auto* encode = app.add_subcommand("encode", "encode 12 info bits (3 hex digits)");
    encode->add_option("hex", encode_hex, "info bits as 3 hex digits")->required();

    std::string decode_hex;
    bool decode_json = false;
    auto* decode = app.add_subcommand("decode", "decode a 24-bit word (6 hex digits)");
    decode->add_option("hex", decode_hex, "received word as 6 hex digits")->required();
    decode->add_flag("--json", decode_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (derive->parsed()) return run_derive(derive_dir, derive_format, derive_syndrome);
        if (verify->parsed()) return run_verify(verify_json);
        if (matrix->parsed()) return run_matrix(matrix_format, matrix_output);
        if (weights->parsed()) return run_weights(weights_json);
        if (report->parsed()) return run_report(report_flag_json);
        if (encode->parsed()) return run_encode(encode_hex);
        if (decode->parsed()) return run_decode(decode_hex, decode_json);
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
