import os
import tempfile

from django.test import SimpleTestCase

from paramreals.apps.core.dyadic import HALF, Dyadic
from paramreals.apps.core.exceptions import DomainError, FormatError, TableRangeError

from ..generators import kc_identity
from ..tables import kc_table_text, load_kc_name, parse_kc_table, store_kc_name

TABLE = """# representation: kc_function
# size: 0 1
+1p1 0\t+1p1
+1p1 1\t+1p1
"""


class KCTableTestCase(SimpleTestCase):
    def test_parse(self):
        table, size_table = parse_kc_table(TABLE)
        self.assertEqual(table((HALF, 1)), HALF)
        self.assertEqual(size_table(1), 1)
        with self.assertRaises(TableRangeError):
            table((HALF, 2))
        with self.assertRaises(TableRangeError):
            size_table(2)

    def test_text_layout(self):
        text = kc_table_text(kc_identity(), [HALF], 1)
        self.assertEqual(text, TABLE)

    def test_errors_carry_line_numbers(self):
        with self.assertRaises(FormatError) as context:
            parse_kc_table(TABLE + "+1p1\t+1p1\n")
        self.assertEqual(context.exception.line, 5)

        with self.assertRaises(FormatError):
            parse_kc_table(TABLE.replace("# size: 0 1\n", ""))
        with self.assertRaises(FormatError):
            parse_kc_table(TABLE.replace("0 1", "1 0"))
        with self.assertRaises(FormatError):
            parse_kc_table(TABLE.replace("kc_function", "interval"))
        with self.assertRaises(FormatError):
            parse_kc_table(TABLE + "+1p1 1\t+1p2\n")

    def test_store_and_load(self):
        points = [Dyadic(j, 3) for j in range(9)]
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "identity.kc")
            store_kc_name(kc_identity(), points, 6, path)
            kappa = load_kc_name(path)

        self.assertEqual(kappa.modulus(6), 6)
        self.assertEqual(kappa((Dyadic(3, 3), 4)), Dyadic(3, 3))
        with self.assertRaises(DomainError):
            kappa((Dyadic(3), 0))


__all__ = ["KCTableTestCase"]
