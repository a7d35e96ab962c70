# pip entry point; the package metadata lives in launch.py.
import os
import runpy

runpy.run_path(os.path.join(os.path.dirname(os.path.abspath(__file__)), 'launch.py'), run_name='__main__')
