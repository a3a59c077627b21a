import io
import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import geoflow.spectrum as sp
from geoflow.errors import (
    ConvergenceRegionError,
    InputError,
    InsufficientSpectrumError,
)


def one_prime(length=1.0, n=1, cutoff=math.inf, angles=None):
    g = sp.PrimeGeodesic(length, angles if angles is not None else (0.0,) * n)
    return sp.LengthSpectrum(n=n, entries=[g], completeness_cutoff=cutoff)


# ---------------------------------------------------------------------------
# value objects

def test_prime_geodesic_normalizes_fields():
    g = sp.PrimeGeodesic("1.5", [0.25], multiplicity="2")
    assert g.length == 1.5
    assert g.angles == (0.25,)
    assert g.multiplicity == 2


@pytest.mark.parametrize("kwargs", [
    dict(length=0.0, angles=(0.0,)),
    dict(length=-1.0, angles=(0.0,)),
    dict(length=math.inf, angles=(0.0,)),
    dict(length=1.0, angles=(math.nan,)),
    dict(length=1.0, angles=(0.0,), multiplicity=0),
])
def test_prime_geodesic_rejects_bad_input(kwargs):
    with pytest.raises(InputError):
        sp.PrimeGeodesic(**kwargs)


def test_length_spectrum_checks_angle_arity():
    g = sp.PrimeGeodesic(1.0, (0.0, 0.0))
    with pytest.raises(InputError):
        sp.LengthSpectrum(n=1, entries=[g])


def test_class_term_length():
    g = sp.PrimeGeodesic(0.75, (0.0,))
    assert sp.ClassTerm(g, 4).length == 3.0
    with pytest.raises(InputError):
        sp.ClassTerm(g, 0)


# ---------------------------------------------------------------------------
# serialization

def test_jsonl_round_trip_is_bit_exact():
    spec = sp.synthesize(2, 25, seed=3)
    text = sp.serialize(spec, "jsonl")
    back = sp.parse(text, "jsonl")
    assert back == spec


def test_csv_round_trip_is_bit_exact():
    spec = sp.synthesize(3, 25, seed=4)
    text = sp.serialize(spec, "csv")
    back = sp.parse(text, "csv")
    assert back == spec


def test_jsonl_header_shape():
    spec = sp.synthesize(2, 3, seed=9)
    first = sp.serialize(spec, "jsonl").splitlines()[0]
    head = json.loads(first)
    assert head["format"] == "geoflow-spectrum"
    assert head["version"] == 1
    assert head["n"] == 2
    assert head["cutoff"] == spec.completeness_cutoff
    assert head["growth"] == spec.growth_constant


def test_csv_header_shape():
    spec = sp.synthesize(2, 3, seed=9)
    lines = sp.serialize(spec, "csv").splitlines()
    assert lines[0].startswith("# geoflow-spectrum version=1 n=2 cutoff=")
    assert lines[1] == "length,angle_2,angle_3,mult"


def test_infinite_cutoff_round_trips_both_formats():
    spec = one_prime(cutoff=math.inf)
    for fmt in ("jsonl", "csv"):
        back = sp.parse(sp.serialize(spec, fmt), fmt)
        assert math.isinf(back.completeness_cutoff)


def test_parse_accepts_file_objects():
    spec = sp.synthesize(1, 5, seed=1)
    buf = io.StringIO(sp.serialize(spec, "jsonl"))
    assert sp.parse(buf) == spec


def test_parse_reports_line_numbers():
    spec = sp.synthesize(1, 3, seed=1)
    lines = sp.serialize(spec, "jsonl").splitlines()
    lines[2] = '{"length": -3, "angles": [0.0], "mult": 1}'
    with pytest.raises(InputError, match="line 3"):
        sp.parse("\n".join(lines), "jsonl")


def test_parse_rejects_missing_header():
    with pytest.raises(InputError):
        sp.parse('{"length": 1.0, "angles": [0.0], "mult": 1}', "jsonl")
    with pytest.raises(InputError):
        sp.parse("", "jsonl")


def test_parse_rejects_unknown_format():
    with pytest.raises(InputError):
        sp.parse("x", "xml")


def test_from_complex_lengths():
    spec = sp.from_complex_lengths([complex(1.0, 0.5), complex(2.0, -0.25)],
                                   cutoff=2.0)
    assert spec.n == 1
    assert [g.length for g in spec.entries] == [1.0, 2.0]
    assert [g.angles for g in spec.entries] == [(0.5,), (-0.25,)]
    assert spec.completeness_cutoff == 2.0


# ---------------------------------------------------------------------------
# validation

def test_validate_fits_growth_constant():
    report = sp.validate(one_prime())
    # single unit-length prime: N(1) * e^{-2n} with n = 1
    assert report.fitted_growth == pytest.approx(math.exp(-2), abs=1e-16)
    assert report.sorted_ok
    assert report.ok()


def test_validate_records_constant_on_spectrum():
    spec = one_prime()
    spec.growth_constant = None
    sp.validate(spec)
    assert spec.growth_constant == pytest.approx(math.exp(-2))


def test_validate_counts_multiplicity():
    g = sp.PrimeGeodesic(1.0, (0.0,), multiplicity=3)
    spec = sp.LengthSpectrum(n=1, entries=[g], completeness_cutoff=1.0)
    assert sp.validate(spec).entry_count == 3
    assert spec.growth_constant == pytest.approx(3 * math.exp(-2))


def test_validate_flags_unsorted_without_raising():
    gs = [sp.PrimeGeodesic(2.0, (0.0,)), sp.PrimeGeodesic(1.0, (0.0,))]
    spec = sp.LengthSpectrum(n=1, entries=gs, completeness_cutoff=2.0)
    report = sp.validate(spec)
    assert not report.sorted_ok
    assert not report.ok()
    assert any("sorted" in w for w in report.warnings)


def test_validate_growth_bound_warning():
    report = sp.validate(one_prime(), growth_bound=1e-3)
    assert any("exceeds bound" in w for w in report.warnings)
    assert not report.ok()


# ---------------------------------------------------------------------------
# synthesis

def test_synthesize_is_deterministic():
    a = sp.synthesize(2, 30, seed=42)
    b = sp.synthesize(2, 30, seed=42)
    assert a == b
    assert a != sp.synthesize(2, 30, seed=43)


def test_synthesize_shape():
    spec = sp.synthesize(2, 30, seed=42)
    assert spec.n == 2
    assert len(spec) == 30
    lengths = [g.length for g in spec]
    assert lengths == sorted(lengths)
    assert all(l > 0.5 for l in lengths)
    assert all(g.multiplicity == 1 for g in spec)
    assert all(0 <= a < 2 * math.pi for g in spec for a in g.angles)
    assert spec.completeness_cutoff == lengths[-1]
    assert spec.growth_constant is not None


def test_synthesize_empty():
    spec = sp.synthesize(1, 0, seed=0)
    assert len(spec) == 0
    assert spec.completeness_cutoff == 0.0


def test_synthesize_rejects_negative_count():
    with pytest.raises(InputError):
        sp.synthesize(1, -1, seed=0)


# ---------------------------------------------------------------------------
# per-class quantities

def test_holonomy_eigenvalues_shape_and_values():
    g = sp.PrimeGeodesic(1.0, (0.5, 1.25))
    evs = sp.holonomy_eigenvalues(sp.ClassTerm(g, 2))
    assert len(evs) == 4
    r = math.exp(-2.0)
    expected = {
        complex(r * math.cos(1.0), r * math.sin(1.0)),
        complex(r * math.cos(1.0), -r * math.sin(1.0)),
        complex(r * math.cos(2.5), r * math.sin(2.5)),
        complex(r * math.cos(2.5), -r * math.sin(2.5)),
    }
    for ev in evs:
        assert min(abs(ev - e) for e in expected) < 1e-15


def test_det_factor_frozen_value():
    g = sp.PrimeGeodesic(1.0, (0.0,))
    got = sp.det_factor(sp.ClassTerm(g, 1))
    assert got.real == pytest.approx((1 - math.exp(-1)) ** 2, abs=1e-15)
    assert got.imag == 0.0


def test_det_factor_positive_real_for_real_angles():
    g = sp.PrimeGeodesic(0.8, (0.9,))
    v = sp.det_factor(sp.ClassTerm(g, 3))
    assert abs(v.imag) < 1e-15
    assert v.real > 0


# ---------------------------------------------------------------------------
# class iteration

def test_class_iterator_powers_at_explicit_cutoff():
    stream = sp.class_iterator(one_prime(), 4.0, 1e-6, cutoff=3.5)
    assert [t.power for t in stream] == [1, 2, 3]
    assert stream.cutoff == 3.5
    assert stream.tail_bound <= 1e-6


def test_class_iterator_orders_by_total_length():
    ga = sp.PrimeGeodesic(0.9, (0.0,))
    gb = sp.PrimeGeodesic(1.25, (0.0,))
    spec = sp.LengthSpectrum(n=1, entries=[ga, gb],
                             completeness_cutoff=math.inf)
    stream = sp.class_iterator(spec, 3.0, 1e-8)
    lengths = [t.length for t in stream]
    assert lengths == sorted(lengths)
    assert {(round(t.prime.length, 2), t.power) for t in stream} >= {
        (0.9, 1), (1.25, 1), (0.9, 2)}


def test_class_iterator_tail_shrinks_with_target():
    spec = sp.synthesize(1, 50, seed=12)
    spec.completeness_cutoff = math.inf  # treat the list as exhaustive
    loose = sp.class_iterator(spec, 4.0, 1e-4)
    tight = sp.class_iterator(spec, 4.0, 1e-9)
    assert tight.cutoff > loose.cutoff
    assert tight.tail_bound < loose.tail_bound <= 1e-4


def test_class_iterator_complete_spectrum_allows_small_decay():
    # declared complete to infinity: no unlisted-prime bound is needed, so
    # any positive decay rate is certifiable
    stream = sp.class_iterator(one_prime(), 0.5, 1e-8)
    assert stream.tail_bound <= 1e-8


def test_class_iterator_rejects_nonpositive_decay():
    with pytest.raises(ConvergenceRegionError):
        sp.class_iterator(one_prime(), 0.0, 1e-8)
    with pytest.raises(ConvergenceRegionError):
        sp.class_iterator(one_prime(), -1.0, 1e-8)


def test_class_iterator_rejects_bad_target():
    with pytest.raises(InputError):
        sp.class_iterator(one_prime(), 3.0, 0.0)


def test_class_iterator_incomplete_spectrum_at_low_decay():
    spec = sp.synthesize(1, 20, seed=5)
    with pytest.raises(ConvergenceRegionError, match="incomplete"):
        sp.class_iterator(spec, 1.5, 1e-8)


def test_class_iterator_insufficient_spectrum():
    spec = sp.synthesize(1, 20, seed=5)  # complete only to ~5
    with pytest.raises(InsufficientSpectrumError):
        sp.class_iterator(spec, 2.5, 1e-13)


def test_class_iterator_explicit_cutoff_that_cannot_certify():
    with pytest.raises(InsufficientSpectrumError):
        sp.class_iterator(one_prime(), 4.0, 1e-12, cutoff=1.0)


def test_class_iterator_includes_every_listed_prime_power():
    # primes beyond the completeness cutoff still contribute their classes
    g_low = sp.PrimeGeodesic(1.0, (0.0,))
    g_high = sp.PrimeGeodesic(6.0, (0.3,))
    spec = sp.LengthSpectrum(n=1, entries=[g_low, g_high],
                             completeness_cutoff=5.0)
    sp.validate(spec)
    stream = sp.class_iterator(spec, 4.0, 1e-4, cutoff=6.5)
    assert any(t.prime is g_high for t in stream)


def test_class_iterator_minimality_of_chosen_cutoff():
    spec = sp.synthesize(1, 40, seed=8)
    spec.completeness_cutoff = math.inf
    stream = sp.class_iterator(spec, 3.0, 1e-8)
    # nudging the cutoff down by a hair must break the certificate
    with pytest.raises(InsufficientSpectrumError):
        sp.class_iterator(spec, 3.0, 1e-8, cutoff=stream.cutoff * 0.98)


# ---------------------------------------------------------------------------
# properties

angle = st.floats(min_value=0.0, max_value=6.28, allow_nan=False)


@st.composite
def spectra(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    count = draw(st.integers(min_value=0, max_value=12))
    lengths = sorted(
        draw(st.lists(st.floats(min_value=0.1, max_value=9.0),
                      min_size=count, max_size=count))
    )
    entries = [
        sp.PrimeGeodesic(
            l, tuple(draw(st.lists(angle, min_size=n, max_size=n))),
            draw(st.integers(min_value=1, max_value=3)))
        for l in lengths
    ]
    cutoff = draw(st.sampled_from([0.0, 5.0, math.inf]))
    return sp.LengthSpectrum(n=n, entries=entries, completeness_cutoff=cutoff)


@settings(max_examples=60, deadline=None)
@given(spectra(), st.sampled_from(["jsonl", "csv"]))
def test_round_trip_property(spec, fmt):
    assert sp.parse(sp.serialize(spec, fmt), fmt) == spec


@settings(max_examples=30, deadline=None)
@given(spectra())
def test_validate_never_raises(spec):
    report = sp.validate(spec)
    assert report.fitted_growth >= 0.0
