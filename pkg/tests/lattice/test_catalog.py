"""Unit tests for the built-in catalog and model files."""

import json
import os
import tempfile
import unittest

import numpy as np

from src.lattice.catalog import (
    BUILTIN_NAMES,
    CatalogError,
    boolean_algebra,
    catalog_list,
    from_dict,
    from_file,
    get_structure,
    mo,
    o6,
    to_dict,
    to_file,
)


class TestBuiltins(unittest.TestCase):
    """Test cases for the catalog constructors."""

    def test_boolean_ids_are_bitmasks(self):
        p = boolean_algebra(2)
        self.assertEqual(p.names, ("0", "p", "q", "1"))
        self.assertTrue(p.le(1, 3))
        self.assertFalse(p.le(1, 2))
        self.assertEqual(list(p.ortho), [3, 2, 1, 0])

    def test_mo_layout(self):
        p = mo(2)
        self.assertEqual(p.names, ("0", "x", "x'", "y", "y'", "1"))
        self.assertEqual(int(p.ortho[p.index("y")]), p.index("y'"))
        self.assertFalse(p.le(p.index("x"), p.index("y")))

    def test_sizes(self):
        self.assertEqual(boolean_algebra(4).n, 16)
        self.assertEqual(mo(4).n, 10)
        self.assertEqual(o6().n, 6)
        self.assertEqual(get_structure("mo2xboolean1").n, 12)

    def test_mo_names_past_four_blocks(self):
        p = mo(6)
        self.assertEqual(p.names[1:13:2], ("x", "y", "z", "w", "x5", "x6"))
        self.assertEqual(p.names[12], "x6'")

    def test_bad_parameters(self):
        with self.assertRaises(CatalogError):
            boolean_algebra(0)
        with self.assertRaises(CatalogError):
            mo(0)
        with self.assertRaises(CatalogError):
            get_structure("lattice7")

    def test_catalog_list(self):
        frame = catalog_list()
        self.assertEqual(list(frame["name"]), BUILTIN_NAMES)
        rows = frame.set_index("name")
        for k in (1, 2, 3, 4):
            self.assertTrue(rows.loc[f"boolean{k}", "distributive"])
        for k in (2, 3, 4):
            self.assertTrue(rows.loc[f"mo{k}", "orthomodular"])
            self.assertFalse(rows.loc[f"mo{k}", "distributive"])
        self.assertTrue(rows.loc["o6", "lattice"])
        self.assertFalse(rows.loc["o6", "orthomodular"])


class TestModelFiles(unittest.TestCase):
    """Test cases for the JSON model-file format."""

    def test_dict_roundtrip_keeps_order(self):
        for name in ("boolean2", "mo3", "o6"):
            with self.subTest(structure=name):
                p = get_structure(name)
                q = from_dict(to_dict(p))
                self.assertEqual(q.names, p.names)
                self.assertTrue(np.array_equal(q.leq, p.leq))
                self.assertTrue(np.array_equal(q.ortho, p.ortho))

    def test_covers_are_hasse_edges(self):
        covers = to_dict(boolean_algebra(1))["covers"]
        self.assertEqual(covers, [["0", "1"]])

    def test_file_roundtrip(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "mo2.json")
            to_file(mo(2), path)
            loaded = from_file(path)
            self.assertEqual(loaded.name, "mo2")
            self.assertEqual(loaded.n, 6)

    def test_malformed_files(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "bad.json")
            with open(path, "w") as f:
                f.write("{not json")
            with self.assertRaises(CatalogError):
                from_file(path)
            with open(path, "w") as f:
                json.dump({"elements": ["0", "1"], "ortho": {"0": "1"}, "bottom": "0", "top": "1"}, f)
            with self.assertRaises(CatalogError):
                from_file(path)
            with self.assertRaises(CatalogError):
                from_file(os.path.join(tmp, "missing.json"))

    def test_file_that_is_not_an_orthoposet(self):
        data = to_dict(boolean_algebra(2))
        data["ortho"] = {name: "0" for name in data["elements"]}
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "collapsed.json")
            with open(path, "w") as f:
                json.dump(data, f)
            with self.assertRaises(CatalogError) as ctx:
                from_file(path)
        self.assertIn("not an orthoposet", str(ctx.exception))
        self.assertIn("involution", str(ctx.exception))


if __name__ == "__main__":
    unittest.main()
