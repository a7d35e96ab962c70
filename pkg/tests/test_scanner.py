import json
import os
import tempfile
import unittest
from pathlib import Path
from gaussharmonic.tools import CheckpointError, MalformedSpecError
from gaussharmonic.congruences import Classification, classify_all, compare_with_table
from gaussharmonic.cli import (
    ScanCheckpoint, load_checkpoint, save_checkpoint, scan_primes, select_anomalies, scan_composites,
    records_frame, render_frame,
)


W, S, NONE = Classification.WEAKER, Classification.STRONGER, Classification.NONE

# Irregular (p, k) pairs for p < 300, 1 <= k <= 12: (p, type, observed exponent).
# The reference table leaves out (5, 6), (7, 10) and (13, 10); exact sums give valuation 2.
ANOMALIES_BELOW_300 = {
    1: ((3, W, 3), (5, W, 3), (31, S, 5), (37, S, 5)),
    2: ((5, W, 2), (31, S, 4), (37, S, 4)),
    3: ((5, W, 1), (31, S, 3), (37, S, 3)),
    4: ((3, NONE, 0), (5, NONE, 0), (31, S, 2), (37, S, 2)),
    5: ((3, W, 3), (7, S, 5), (67, S, 5)),
    6: ((5, W, 2), (7, S, 4), (67, S, 4)),
    7: ((3, W, 1), (5, W, 1), (7, S, 3), (67, S, 3)),
    8: ((3, NONE, 0), (5, NONE, 0), (67, S, 2)),
    9: ((7, W, 3), (13, W, 3), (11, S, 5)),
    10: ((3, W, 2), (7, W, 2), (13, W, 2), (11, S, 4)),
    11: ((3, W, 1), (5, W, 1), (7, W, 1), (13, W, 1), (11, S, 3)),
    12: ((3, NONE, 0), (5, NONE, 0), (7, NONE, 0), (13, NONE, 0)),
}

ANOMALIES_BELOW_1000_EXTRA = {
    5: ((877, S, 5),),
    6: ((877, S, 4),),
    7: ((877, S, 3),),
    8: ((877, S, 2),),
}


def anomaly_set(*tables):
    return {
        (p, k, classification, observed)
        for table in tables for k, rows in table.items() for p, classification, observed in rows
    }


def observed_set(records):
    return {(r.base, r.k, r.classification, r.observed) for r in select_anomalies(records)}


class TestScanPrimes(unittest.TestCase):
    def test_small_scan(self):
        self.records = scan_primes(40, 3, 8, jobs=1)
        self.expected = {row for row in anomaly_set(ANOMALIES_BELOW_300) if row[0] <= 40 and row[1] <= 3}
        self.assertEqual(observed_set(self.records), self.expected)
        self.assertEqual([(r.k, r.base) for r in self.records], sorted((r.k, r.base) for r in self.records))
        self.assertNotIn(2, {r.base for r in self.records})

    def test_table_below_300(self):
        self.records = scan_primes(299, 12, 8)
        self.assertEqual(observed_set(self.records), anomaly_set(ANOMALIES_BELOW_300))
        self.assertEqual(compare_with_table(self.records), {
            'unlisted_anomalies': [(5, 6, 'Weaker', 2), (7, 10, 'Weaker', 2), (13, 10, 'Weaker', 2)],
            'missing_anomalies': [],
        })

    @unittest.skipUnless(os.environ.get('GW_FULL_TIER'), 'full tier only')
    def test_table_below_1000(self):
        self.records = scan_primes(999, 12, 8)
        self.assertEqual(observed_set(self.records), anomaly_set(ANOMALIES_BELOW_300, ANOMALIES_BELOW_1000_EXTRA))
        self.assertEqual(compare_with_table(self.records), {
            'unlisted_anomalies': [(5, 6, 'Weaker', 2), (7, 10, 'Weaker', 2), (13, 10, 'Weaker', 2)],
            'missing_anomalies': [],
        })

    def test_reference_table_diff(self):
        self.diagnostics = compare_with_table(scan_primes(13, 12, 8, jobs=1))
        self.assertEqual(self.diagnostics['unlisted_anomalies'],
                         [(5, 6, 'Weaker', 2), (7, 10, 'Weaker', 2), (13, 10, 'Weaker', 2)])
        self.assertEqual(self.diagnostics['missing_anomalies'], [])

        self.diagnostics = compare_with_table(classify_all(31, 2, 8), {1: ((31, S, 5),), 2: ((31, S, 5),)})
        self.assertEqual(self.diagnostics['unlisted_anomalies'], [(31, 2, 'Stronger', 4)])
        self.assertEqual(self.diagnostics['missing_anomalies'], [(31, 2, 'Stronger', 5)])

        self.diagnostics = compare_with_table(classify_all(7, 4, 8))
        self.assertEqual(self.diagnostics, {'unlisted_anomalies': [], 'missing_anomalies': []})

    def test_worker_count_determinism(self):
        self.single = render_frame(records_frame(scan_primes(100, 4, 8, jobs=1)), 'csv')
        self.many = render_frame(records_frame(scan_primes(100, 4, 8, jobs=3)), 'csv')
        self.assertEqual(self.single, self.many)

    def test_bad_arguments(self):
        with self.assertRaises(MalformedSpecError):
            scan_primes(2, 4, 8)
        with self.assertRaises(MalformedSpecError):
            scan_primes(50, 4, 4)
        with self.assertRaises(MalformedSpecError):
            scan_primes(50, 0, 8)

    def test_select_anomalies(self):
        self.records = scan_primes(13, 2, 8, jobs=1)
        self.assertEqual(len(select_anomalies(self.records, include_all=True)), 2 * 5)
        self.assertTrue(all(r.classification is not Classification.EXPECTED for r in select_anomalies(self.records)))


class TestCheckpoint(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = Path(self.tmp.name) / 'scan.json'
        self.parameters = {'p_max': 100, 'k_max': 4, 'precision': 8}

    def tearDown(self):
        self.tmp.cleanup()

    def test_resume_matches_fresh(self):
        self.partial = ScanCheckpoint(dict(self.parameters))
        for p in (3, 5, 7, 11, 13, 17):
            self.partial.add(p, classify_all(p, 4, 8))
        save_checkpoint(self.partial, self.path)

        self.resumed = scan_primes(100, 4, 8, jobs=1, checkpoint_path=self.path)
        self.fresh = scan_primes(100, 4, 8, jobs=1)
        self.assertEqual(render_frame(records_frame(self.resumed), 'json'),
                         render_frame(records_frame(self.fresh), 'json'))

        self.final = json.loads(self.path.read_text(encoding='UTF-8'))
        self.assertEqual(self.final['completed_bases'][-1], 97)
        self.assertEqual(len(self.final['records']), 24 * 4)

    def test_round_trip(self):
        self.checkpoint = ScanCheckpoint(dict(self.parameters))
        self.checkpoint.add(31, classify_all(31, 4, 8))
        save_checkpoint(self.checkpoint, self.path)
        self.loaded = load_checkpoint(self.path, self.parameters)
        self.assertEqual(self.loaded, self.checkpoint)
        self.assertEqual(os.listdir(self.tmp.name), ['scan.json'])

    def test_missing_file_starts_fresh(self):
        self.checkpoint = load_checkpoint(self.path, self.parameters)
        self.assertEqual(self.checkpoint.completed_bases, [])
        self.assertEqual(self.checkpoint.schema_version, 1)

    def test_corrupt(self):
        self.path.write_text('{"schema_version": 1, "records": [', encoding='UTF-8')
        with self.assertRaises(CheckpointError):
            load_checkpoint(self.path, self.parameters)
        self.path.write_text('[]', encoding='UTF-8')
        with self.assertRaises(CheckpointError):
            load_checkpoint(self.path, self.parameters)

    def test_mismatched_parameters(self):
        save_checkpoint(ScanCheckpoint(dict(self.parameters)), self.path)
        with self.assertRaises(CheckpointError):
            scan_primes(60, 4, 8, jobs=1, checkpoint_path=self.path)

    def test_schema_version(self):
        save_checkpoint(ScanCheckpoint(dict(self.parameters), schema_version=99), self.path)
        with self.assertRaises(CheckpointError):
            load_checkpoint(self.path, self.parameters)


class TestScanComposites(unittest.TestCase):
    def test_parallel_matches_serial(self):
        self.serial = scan_composites(40, jobs=1)
        self.parallel = scan_composites(40, jobs=2)
        self.assertEqual(self.serial, self.parallel)
        self.assertEqual([r.base for r in self.serial if r.holds], [21, 26, 34, 35, 39, 40])


if __name__ == '__main__':
    unittest.main()
