import json

from quadmode.sweep import SweepRow
from quadmode.tables import format_float, rows_to_csv, rows_to_json


def make_row(i, stable=True, en=0.123456789012345678, error=None):
    return SweepRow(
        index=i,
        axis_name="delta_w",
        axis_value=-0.8 + 0.1 * i,
        stable=stable,
        max_real_eig=-0.02,
        e_n=None if not stable or error else {"Micro1_Micro2": en},
        g_c=0.2727,
        g_w=(0.366, 0.366),
        error=error,
    )


class TestFloatFormat:
    def test_17_significant_digits(self):
        assert format_float(1.0 / 3.0) == "0.33333333333333331"
        assert format_float(-0.02) == "-0.02"

    def test_roundtrip_is_lossless(self):
        for x in (1 / 3, 2.0**-52, 0.6482000119829258, 1e300):
            assert float(format_float(x)) == x


class TestCsv:
    def test_header_schema(self):
        body = rows_to_csv([("only", [make_row(0)])], ["Micro1_Micro2"])
        head = body.splitlines()[0]
        assert head == (
            "index,axis_name,axis_value,stable,max_real_eig_over_omega_m,"
            "EN_Micro1_Micro2,G_c_over_omega_m,G_w1_over_omega_m,"
            "G_w2_over_omega_m"
        )

    def test_multi_curve_gets_curve_column(self):
        body = rows_to_csv(
            [("a", [make_row(0)]), ("b", [make_row(0)])], ["Micro1_Micro2"]
        )
        lines = body.splitlines()
        assert lines[0].startswith("curve,index,")
        assert lines[1].startswith("a,0,") and lines[2].startswith("b,0,")

    def test_unstable_rows_leave_en_empty(self):
        body = rows_to_csv(
            [("only", [make_row(0, stable=False)])], ["Micro1_Micro2"]
        )
        row = body.splitlines()[1].split(",")
        assert row[3] == "false"
        assert row[5] == ""

    def test_stable_value_printed_fully(self):
        body = rows_to_csv([("only", [make_row(0)])], ["Micro1_Micro2"])
        row = body.splitlines()[1].split(",")
        assert row[5] == "0.12345678901234568"

    def test_multiple_pairs_in_request_order(self):
        r = make_row(0)
        r = SweepRow(
            **{
                **r.__dict__,
                "e_n": {"Opto_Micro1": 0.5, "Micro1_Micro2": 0.25},
            }
        )
        body = rows_to_csv([("x", [r])], ["Opto_Micro1", "Micro1_Micro2"])
        head = body.splitlines()[0]
        assert "EN_Opto_Micro1,EN_Micro1_Micro2" in head


class TestJson:
    def test_field_names_match_csv(self):
        body = rows_to_json([("only", [make_row(0)])], ["Micro1_Micro2"])
        [obj] = json.loads(body)
        assert list(obj) == [
            "index",
            "axis_name",
            "axis_value",
            "stable",
            "max_real_eig_over_omega_m",
            "EN_Micro1_Micro2",
            "G_c_over_omega_m",
            "G_w1_over_omega_m",
            "G_w2_over_omega_m",
            "error",
        ]

    def test_null_for_masked_fields(self):
        body = rows_to_json(
            [("only", [make_row(0, stable=False)])], ["Micro1_Micro2"]
        )
        [obj] = json.loads(body)
        assert obj["stable"] is False
        assert obj["EN_Micro1_Micro2"] is None
        assert obj["error"] is None

    def test_error_text_carried(self):
        body = rows_to_json(
            [("only", [make_row(0, error="LyapunovSolveError: x")])],
            ["Micro1_Micro2"],
        )
        [obj] = json.loads(body)
        assert obj["error"] == "LyapunovSolveError: x"

    def test_curve_field_when_multi(self):
        body = rows_to_json(
            [("a", [make_row(0)]), ("b", [make_row(1)])], ["Micro1_Micro2"]
        )
        objs = json.loads(body)
        assert [o["curve"] for o in objs] == ["a", "b"]
