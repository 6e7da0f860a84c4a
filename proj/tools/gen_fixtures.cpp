// Writes the bundled diagram fixtures (bug.json, star1/3/7.json).

#include <fstream>
#include <iostream>
#include <string>

#include "kontext/diagram.hpp"
#include "kontext/diagram_io.hpp"

namespace {

int write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << path << "\n";
        return 1;
    }
    out << text;
    return out ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "data";
    int rc = 0;
    rc |= write_file(dir + "/bug.json", kontext::serialize_diagram(kontext::make_bug()));
    rc |= write_file(dir + "/star1.json", kontext::serialize_diagram(kontext::make_star(1)));
    rc |= write_file(dir + "/star3.json", kontext::serialize_diagram(kontext::make_star(3)));
    rc |= write_file(dir + "/star7.json", kontext::serialize_diagram(kontext::make_star(7)));
    if (rc == 0) std::cout << "fixtures written to " << dir << "\n";
    return rc;
}
