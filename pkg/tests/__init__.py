"""
Created on 27 Sep 2020

@author: semuadmin
"""
