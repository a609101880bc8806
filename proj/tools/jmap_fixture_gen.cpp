// Regenerates the fixture matrix files and catalog from the builders in
// jmap::fixtures. Run from the repository root:  jmap_fixture_gen fixtures

#include "jmap/fixtures.hpp"
#include "jmap/io.hpp"
#include "jmap/universal.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace jmap;

namespace {

Rational R(long long v) { return Rational(v); }

struct Entry {
    std::string name;
    std::string file;
    std::string phi;
    std::string mode;
    bool good;
    int universal;  // -1: omit, 0: no, 1: yes
    int order;      // -1: omit
    std::string content;
};

std::string json_catalog(const std::vector<Entry>& entries) {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Entry& e = entries[i];
        os << "  {\"name\": \"" << e.name << "\", \"file\": \"" << e.file << "\", \"phi\": \""
           << e.phi << "\", \"mode\": \"" << e.mode << "\", \"good\": " << (e.good ? "true" : "false");
        if (e.universal >= 0) os << ", \"universal\": " << (e.universal ? "true" : "false");
        if (e.order >= 0) os << ", \"order\": " << e.order;
        os << "}" << (i + 1 < entries.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "fixtures";
    std::vector<Entry> entries;

    auto add = [&](const std::string& name, const RMatrix& m, const std::string& phi, bool good,
                   int universal, int order) {
        entries.push_back({name, name + ".mat", phi, "exact", good, universal, order, format_matrix(m)});
    };
    auto addc = [&](const std::string& name, const CMatrix& m, const std::string& phi, bool good) {
        entries.push_back({name, name + ".cmat", phi, "float", good, -1, -1, format_cmatrix(m)});
    };

    add("u2_upper", RMatrix::from_rows({{R(0), R(7)}, {R(0), R(0)}}), "pow 2", true, 1, 1);
    add("u2_equal_rows", RMatrix::from_rows({{R(2), R(-2)}, {R(2), R(-2)}}), "pow 3", true, 1, 1);
    add("u3_rows_equal",
        RMatrix::from_rows({{R(1), R(2), R(-3)}, {R(1), R(2), R(-3)}, {R(1), R(2), R(-3)}}), "pow 2",
        true, 1, 1);
    add("u3_mixed", RMatrix::from_rows({{R(0), R(1), R(-1)}, {R(1), R(1), R(-1)}, {R(1), R(1), R(-1)}}),
        "pow 2", true, 1, 2);
    add("u4_block13",
        RMatrix::from_rows({{R(0), R(1), R(2), R(-3)},
                            {R(4), R(5), R(6), R(-11)},
                            {R(4), R(5), R(6), R(-11)},
                            {R(4), R(5), R(6), R(-11)}}),
        "pow 2", true, 1, 2);
    add("u5_block23", fixtures::universal_dim5(R(1), R(2), R(3), R(4), R(6), R(7), R(8)), "pow 2",
        true, 1, 2);
    add("u6_numeric", fixtures::numeric_universal_unordered(), "pow 2", true, 1, 3);
    add("u6_numeric_ordered", fixtures::numeric_universal_ordered(), "pow 2", true, 1, 3);
    {
        std::vector<Rational> params;
        for (int i = 1; i <= 32; ++i) params.push_back(R(i));
        add("u8_block1223", build_universal(fixtures::universal_dim8_spec(params)), "pow 2", true, 1, 4);
    }
    add("g2d_s2_t3_d3", g2d(R(2), R(3), 3), "pow 3", true, 0, 1);
    add("idempotent4", fixtures::idempotent_centrosymmetric(R(1), R(1), R(1)), "pow 2", true, 0, 2);
    add("rank2_dim6", fixtures::rank2_dim6(R(1), R(2)), "pow 3", true, 0, 1);
    add("rank2_dim8", fixtures::rank2_dim8(R(1), R(1)), "pow 5", true, 0, 1);
    add("cross4", fixtures::cross_shaped({R(1), R(2), R(-1)}, {R(1), R(2), R(3)}), "pow 2", true, 0, 2);
    add("rational_rank2_dim4",
        fixtures::rational_rank2_dim4(R(1), R(2), R(3), R(4), R(1), R(1), R(1), R(2)), "pow 2", true,
        0, 2);
    add("homog4_deg3",
        fixtures::homogeneity_family_dim4(R(1), R(2), R(3), R(4), {R(1), R(2), R(1), R(-1)}), "pow 3",
        true, 0, 1);
    add("identity2", RMatrix::identity(2), "pow 2", false, 0, -1);

    add("log2_rows", RMatrix::from_rows({{R(3), R(-3)}, {R(5), R(-5)}}), "log", true, 0, -1);
    add("log3_circulant", circulant({R(0), R(1), R(-1)}), "log", true, 0, -1);
    {
        RMatrix c = circulant({R(0), R(1), R(-1)});
        add("log3_circulant_sq", c * c, "log", false, -1, -1);
        add("log6_kronecker", kronecker(c, RMatrix::from_rows({{R(1), R(1)}, {R(1), R(0)}})), "log",
            false, -1, -1);
    }
    add("log4_family", fixtures::log_family_dim4(R(1), R(2), R(1), R(3)), "log", true, 0, -1);

    addc("logc4_i", fixtures::log_circulant4_i(), "log", true);
    addc("logc4_conj", fixtures::log_circulant4_conj(), "log", true);
    addc("logc5_sqrt5", fixtures::log_circulant5_sqrt5(), "log", true);
    addc("logc5_golden", fixtures::log_circulant5_golden(), "log", true);
    addc("exp_universal3",
         CMatrix::from_rational(RMatrix::from_rows(
             {{R(0), R(1), R(-1)}, {R(1), R(1), R(-1)}, {R(1), R(1), R(-1)}})),
         "exp", true);
    addc("exp_idempotent4", CMatrix::from_rational(fixtures::idempotent_centrosymmetric(R(1), R(1), R(1))),
         "exp", false);

    for (const auto& e : entries) {
        std::ofstream out(dir + "/" + e.file);
        if (!out) {
            std::cerr << "cannot write " << dir << "/" << e.file << "\n";
            return 1;
        }
        out << e.content;
    }
    std::ofstream cat(dir + "/catalog.json");
    cat << json_catalog(entries);
    std::cout << "wrote " << entries.size() << " fixtures to " << dir << "/\n";
    return 0;
}
