import os
import unittest
from gaussharmonic.tools import config_manager


class TestConfigManager(unittest.TestCase):
    def test_get_config(self):
        self.cm_get1 = config_manager('PRIME_PRECISION')
        self.cm_get2 = config_manager('COMPOSITE_PRECISION')
        self.cm_get3 = config_manager('ORACLE_LIMIT')
        self.cm_get4 = config_manager('TUPLE_K_LIMIT')

        self.cm_get5 = config_manager('LOGGING_LEVEL')
        self.cm_get6 = config_manager('LOGGING_FORMAT')
        self.cm_get7 = config_manager('CHECKPOINT_SCHEMA_VERSION')

        self.cm_get8 = config_manager('SOMETHING_NOT_EXISTING')

        self.assertEqual(self.cm_get1, 8)
        self.assertEqual(self.cm_get2, 4)
        self.assertEqual(self.cm_get3, 50)
        self.assertEqual(self.cm_get4, 12)

        self.assertEqual(self.cm_get5, 'WARNING')
        self.assertEqual(self.cm_get6, '%(asctime)s [%(levelname)s]: %(message)s')
        self.assertEqual(self.cm_get7, 1)

        self.assertEqual(self.cm_get8, None)

    def test_env_override(self):
        os.environ['GW_ORACLE_LIMIT'] = '80'
        try:
            self.cm_env1 = config_manager('ORACLE_LIMIT')
        finally:
            del os.environ['GW_ORACLE_LIMIT']
        self.cm_env2 = config_manager('ORACLE_LIMIT')

        self.assertEqual(self.cm_env1, 80)
        self.assertEqual(self.cm_env2, 50)

        os.environ['GW_LOGGING_LEVEL'] = 'DEBUG'
        try:
            self.cm_env3 = config_manager('LOGGING_LEVEL')
        finally:
            del os.environ['GW_LOGGING_LEVEL']

        self.assertEqual(self.cm_env3, 'DEBUG')

    def test_set_config(self):
        self.cm_set1 = config_manager('PRIME_PRECISION')
        self.cm_set2 = config_manager('PRIME_PRECISION', 6)
        self.cm_set3 = config_manager('PRIME_PRECISION')
        self.cm_set4 = config_manager('PRIME_PRECISION', 8)
        self.cm_set5 = config_manager('PRIME_PRECISION')

        self.assertEqual(self.cm_set1, 8)
        self.assertEqual(self.cm_set2, None)
        self.assertEqual(self.cm_set3, 6)
        self.assertEqual(self.cm_set5, 8)

        self.cm_set11 = config_manager('ORACLE_LIMIT')
        self.cm_set12 = config_manager('ORACLE_LIMIT', '30')
        self.cm_set13 = config_manager('ORACLE_LIMIT')
        self.cm_set14 = config_manager('ORACLE_LIMIT', '50')
        self.cm_set15 = config_manager('ORACLE_LIMIT')

        self.assertEqual(self.cm_set11, 50)
        self.assertEqual(self.cm_set13, 30)
        self.assertEqual(self.cm_set15, 50)

        self.cm_set21 = config_manager('LOGGING_LEVEL')
        self.cm_set22 = config_manager('LOGGING_LEVEL', 'INFO')
        self.cm_set23 = config_manager('LOGGING_LEVEL')
        self.cm_set24 = config_manager('LOGGING_LEVEL', 'WARNING')
        self.cm_set25 = config_manager('LOGGING_LEVEL')

        self.assertEqual(self.cm_set21, 'WARNING')
        self.assertEqual(self.cm_set23, 'INFO')
        self.assertEqual(self.cm_set25, 'WARNING')

        self.cm_set31 = config_manager('LOGGING_LEVEL', "'ERROR'")
        self.cm_set32 = config_manager('LOGGING_LEVEL')
        self.cm_set33 = config_manager('LOGGING_LEVEL', 'WARNING')

        self.assertEqual(self.cm_set32, 'ERROR')


if __name__ == '__main__':
    unittest.main()
