#!/usr/bin/env python3
"""Regenerates include/nlgp/py_stdlib.hpp from sys.stdlib_module_names."""
import sys

names = sorted(n for n in sys.stdlib_module_names if not n.startswith("_"))
with open("include/nlgp/py_stdlib.hpp", "w") as f:
    f.write("// Generated by scripts/gen_py_stdlib.py. Do not edit by hand.\n")
    f.write("#pragma once\n\n#include <string_view>\n\n")
    f.write("namespace nlgp::detail {\n\n")
    f.write("inline constexpr std::string_view kPyStdlibRoots[] = {\n")
    line = "   "
    for n in names:
        tok = f' "{n}",'
        if len(line) + len(tok) > 96:
            f.write(line + "\n")
            line = "   "
        line += tok
    if line.strip():
        f.write(line + "\n")
    f.write("};\n\n} // namespace nlgp::detail\n")
sys.stderr.write(f"{len(names)} stdlib roots\n")
