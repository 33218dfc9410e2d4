"""PGM, label-map, and raw-dump I/O."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from varipix import read_image, read_labelmap, read_pgm, read_raw, write_labelmap, write_pgm, write_raw
from varipix.imgio import ImageFormatError, as_image, quantize


def test_read_ascii_pgm_exact_values(tmp_path):
    path = tmp_path / "a.pgm"
    path.write_text("P2\n# a comment\n2 2\n255\n0 64\n128 255\n")
    img = read_pgm(path)
    assert img.dtype == np.float64
    assert np.array_equal(img, [[0.0, 64.0], [128.0, 255.0]])


def test_binary_and_ascii_agree(tmp_path, rng):
    data = rng.integers(0, 256, size=(7, 5), dtype=np.uint8)
    p5 = tmp_path / "b.pgm"
    write_pgm(data.astype(np.float64), p5)
    p2 = tmp_path / "b2.pgm"
    rows = "\n".join(" ".join(str(v) for v in row) for row in data)
    p2.write_text(f"P2\n5 7\n255\n{rows}\n")
    assert np.array_equal(read_pgm(p5), read_pgm(p2))


def test_write_read_round_trip_integers(tmp_path, rng):
    data = rng.integers(0, 256, size=(16, 9)).astype(np.float64)
    path = tmp_path / "c.pgm"
    write_pgm(data, path)
    assert np.array_equal(read_pgm(path), data)


def test_write_rounds_half_up_and_clips(tmp_path):
    img = np.array([[127.5, 126.4999, -3.0, 300.0, 0.49, 254.5]])
    path = tmp_path / "d.pgm"
    write_pgm(img, path)
    assert np.array_equal(read_pgm(path), [[128.0, 126.0, 0.0, 255.0, 0.0, 255.0]])


def test_quantize_convention():
    assert quantize(np.array([[0.5]]))[0, 0] == 1
    assert quantize(np.array([[1.5]]))[0, 0] == 2
    assert quantize(np.array([[255.4]]))[0, 0] == 255


def test_written_file_size_is_header_plus_pixels(tmp_path):
    img = np.zeros((512, 512))
    path = tmp_path / "e.pgm"
    write_pgm(img, path)
    blob = path.read_bytes()
    header = b"P5\n512 512\n255\n"
    assert blob[: len(header)] == header
    assert len(blob) == len(header) + 512 * 512


def test_binary_pgm_comments_and_whitespace(tmp_path):
    path = tmp_path / "f.pgm"
    path.write_bytes(b"P5 # magic\n# size next\n2\t2\n255\n" + bytes([1, 2, 3, 4]))
    assert np.array_equal(read_pgm(path), [[1.0, 2.0], [3.0, 4.0]])


def test_small_maxval_accepted_large_rejected(tmp_path):
    ok = tmp_path / "g.pgm"
    ok.write_text("P2\n2 1\n15\n0 15\n")
    assert np.array_equal(read_pgm(ok), [[0.0, 15.0]])
    bad = tmp_path / "h.pgm"
    bad.write_text("P2\n2 1\n65535\n0 15\n")
    with pytest.raises(ImageFormatError, match="unsupported maxval"):
        read_pgm(bad)


def test_sample_above_maxval_rejected(tmp_path):
    path = tmp_path / "i.pgm"
    path.write_text("P2\n2 1\n100\n0 101\n")
    with pytest.raises(ImageFormatError, match=r"outside \[0, 100\]"):
        read_pgm(path)


def test_negative_sample_rejected(tmp_path):
    path = tmp_path / "j.pgm"
    path.write_text("P2\n2 1\n255\n-1 0\n")
    with pytest.raises(ImageFormatError, match="outside"):
        read_pgm(path)


def test_truncated_binary_rejected(tmp_path):
    path = tmp_path / "k.pgm"
    path.write_bytes(b"P5\n4 4\n255\n" + bytes(7))
    with pytest.raises(ImageFormatError, match="truncated"):
        read_pgm(path)


def test_bad_magic_rejected(tmp_path):
    path = tmp_path / "l.pgm"
    path.write_bytes(b"P6\n1 1\n255\nx")
    with pytest.raises(ImageFormatError, match="bad magic"):
        read_pgm(path)


def test_non_integer_dimension_rejected(tmp_path):
    path = tmp_path / "m.pgm"
    path.write_text("P2\ntwo 2\n255\n0 0\n")
    with pytest.raises(ImageFormatError, match="non-integer dimension"):
        read_pgm(path)


def test_header_eof_rejected(tmp_path):
    path = tmp_path / "n.pgm"
    path.write_text("P5\n3 3\n")
    with pytest.raises(ImageFormatError, match="unexpected end"):
        read_pgm(path)


def test_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        read_pgm(tmp_path / "absent.pgm")


def test_labelmap_round_trip(tmp_path, rng):
    labels = rng.integers(0, 2, size=(13, 7), dtype=np.int64)
    path = tmp_path / "a.labels"
    write_labelmap(labels, path)
    back = read_labelmap(path)
    assert back.dtype == np.int64
    assert np.array_equal(back, labels)


def test_labelmap_round_trip_large_values(tmp_path):
    labels = np.array([[0, 1], [4095, 4096]], dtype=np.int64)
    path = tmp_path / "b.labels"
    write_labelmap(labels, path)
    assert np.array_equal(read_labelmap(path), labels)


def test_labelmap_count_mismatch_rejected(tmp_path):
    path = tmp_path / "c.labels"
    path.write_text("labels 3 2\n0 1 0\n")
    with pytest.raises(ImageFormatError, match="6 labels.*3 labels"):
        read_labelmap(path)


def test_labelmap_bad_header_rejected(tmp_path):
    path = tmp_path / "d.labels"
    path.write_text("labls 2 2\n0 0\n0 0\n")
    with pytest.raises(ImageFormatError, match="malformed label map header"):
        read_labelmap(path)


def test_raw_round_trip_is_lossless(tmp_path, rng):
    img = rng.random((9, 11)) * 255.0
    img[0, 0] = 1.0 / 3.0
    img[0, 1] = np.nextafter(200.0, 201.0)
    path = tmp_path / "a.rawimg"
    write_raw(img, path)
    back = read_raw(path)
    assert back.dtype == np.float64
    assert np.array_equal(back, img)


def test_raw_bad_header_rejected(tmp_path):
    path = tmp_path / "b.rawimg"
    path.write_text("rawgrey 1 1\n0.0\n")
    with pytest.raises(ImageFormatError, match="malformed raw dump header"):
        read_raw(path)


def test_raw_count_mismatch_rejected(tmp_path):
    path = tmp_path / "c.rawimg"
    path.write_text("rawgray 2 2\n0.0 1.0 2.0\n")
    with pytest.raises(ImageFormatError, match="4 samples.*3 samples"):
        read_raw(path)


def test_read_image_sniffs_all_formats(tmp_path):
    img = np.array([[3.0, 5.0], [7.0, 9.0]])
    p5 = tmp_path / "x.pgm"
    write_pgm(img, p5)
    raw = tmp_path / "x.rawimg"
    write_raw(img, raw)
    p2 = tmp_path / "x2.pgm"
    p2.write_text("P2\n2 2\n255\n3 5\n7 9\n")
    for path in (p5, raw, p2):
        assert np.array_equal(read_image(path), img)


def test_read_image_rejects_unknown_format(tmp_path):
    path = tmp_path / "y.bin"
    path.write_bytes(b"GIF89a....")
    with pytest.raises(ImageFormatError, match="unrecognized image format"):
        read_image(path)


def test_as_image_rejects_non_2d():
    with pytest.raises(ValueError, match="2-D"):
        as_image(np.zeros(6))
    with pytest.raises(ValueError, match="2-D"):
        as_image(np.zeros((2, 2, 2)))


@settings(max_examples=30, deadline=None)
@given(
    arrays(
        np.uint8,
        st.tuples(st.integers(1, 12), st.integers(1, 12)),
        elements=st.integers(0, 255),
    )
)
def test_pgm_round_trip_property(tmp_path_factory, data):
    path = tmp_path_factory.mktemp("pgm") / "t.pgm"
    write_pgm(data.astype(np.float64), path)
    assert np.array_equal(read_pgm(path), data.astype(np.float64))


@settings(max_examples=30, deadline=None)
@given(
    arrays(
        np.float64,
        st.tuples(st.integers(1, 8), st.integers(1, 8)),
        elements=st.floats(0, 255, allow_nan=False),
    )
)
def test_raw_round_trip_property(tmp_path_factory, data):
    path = tmp_path_factory.mktemp("raw") / "t.rawimg"
    write_raw(data, path)
    assert np.array_equal(read_raw(path), data)
